#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "irrtri/surface.hpp"

namespace irrtri {

struct EnumSpec {
  SurfaceClass target;
  int max_vertices = 8;
  bool irreducible_only = false;
  // Zero means unlimited.
  std::chrono::seconds time_budget{0};
};

struct CatalogEntry {
  std::string form;
  int vertex_count = 0;

  auto operator<=>(const CatalogEntry&) const = default;
};

struct Catalog {
  // Sorted by (vertex_count, form); no duplicate forms.
  std::vector<CatalogEntry> entries;
  // False when the time budget cut the search short.
  bool complete = true;
};

// Throws Error(invalid_params) for max_vertices < 3 or an inconsistent target.
Catalog enumerate(const EnumSpec& spec, int jobs = 1);

// Named targets accepted by the CLI: sphere, disk, projective, torus, klein,
// annulus, mobius, pants. Throws Error(unknown_name).
SurfaceClass named_surface(const std::string& name);

}  // namespace irrtri
