#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irrtri/triangulation.hpp"

namespace irrtri {

// Homeomorphism type of a compact connected surface.
struct SurfaceClass {
  bool orientable = true;
  int euler_genus = 0;
  int boundary_count = 0;
  int euler_characteristic = 2;

  static SurfaceClass from(bool orientable, int euler_genus, int boundary_count) {
    return {orientable, euler_genus, boundary_count, 2 - euler_genus - boundary_count};
  }

  bool is_sphere_or_disk() const { return euler_genus == 0 && boundary_count <= 1; }
  bool is_projective_plane() const { return !orientable && euler_genus == 1 && boundary_count == 0; }

  // "orientable 2 0 0"
  std::string to_string() const;

  bool operator==(const SurfaceClass&) const = default;
};

// Boundary walks in a deterministic order: each starts at its smallest
// vertex and proceeds towards the smaller of its two boundary neighbors.
std::vector<std::vector<Vertex>> boundary_walks(const Triangulation& t);

// Consistently oriented copies of all triangles, or nullopt if non-orientable.
std::optional<std::vector<Triangle>> coherent_orientation(const Triangulation& t);

// Throws Error(invalid_triangulation) on invalid input.
SurfaceClass classify_surface(const Triangulation& t);

// A simple closed walk on the 1-skeleton (no repeated vertices).
struct Cycle {
  std::vector<Vertex> vertices;
};

struct CutResult {
  std::vector<Triangulation> components;
  // Per component: boundary walks (component-local ids) that are copies of a cut cycle.
  std::vector<std::vector<std::vector<Vertex>>> copies;
  // Per component: for each copy, the index of the cut cycle it came from.
  std::vector<std::vector<int>> copy_source;
  // Per component: component-local vertex -> original vertex.
  std::vector<std::vector<Vertex>> to_original;

  int copy_count(int cycle_index) const;
};

// Cuts along pairwise vertex-disjoint simple cycles that avoid the boundary
// and use interior edges only. Throws non_simple_cycle, cycle_touches_boundary,
// not_vertex_disjoint as appropriate.
CutResult cut_along_cycles(const Triangulation& t, std::span<const Cycle> cycles);
CutResult cut_along_cycle(const Triangulation& t, const Cycle& c);

enum class Sidedness { one_sided, two_sided };

Sidedness cycle_sidedness(const Triangulation& t, const Cycle& c);

// True iff c is two-sided and bounds a disk.
bool is_null_homotopic(const Triangulation& t, const Cycle& c);

// Both cycles vertex-disjoint and avoiding the boundary. True iff both are
// null-homotopic or they bound an annulus. One-sided input yields false.
bool disjoint_cycles_homotopic(const Triangulation& t, const Cycle& c1, const Cycle& c2);

struct ThreeCycle {
  std::array<Vertex, 3> vertices;
  bool facial = false;

  Cycle cycle() const { return {{vertices[0], vertices[1], vertices[2]}}; }
};

// All triples of pairwise adjacent vertices, sorted.
std::vector<ThreeCycle> enumerate_3cycles(const Triangulation& t);

// Homotopy questions for cycles that may touch the boundary. Every boundary
// walk is coned off by a fresh apex vertex; a cycle of the original surface
// bounds a disk (resp. an annulus with another cycle) there iff it does so in
// the closed surface through a region containing no apex.
class CappedHomotopy {
 public:
  explicit CappedHomotopy(const Triangulation& t);

  const Triangulation& capped() const { return capped_; }
  std::span<const Vertex> apexes() const { return apexes_; }

  Sidedness sidedness(const Cycle& c) const;
  bool null_homotopic(const Cycle& c) const;
  // Cycles must be vertex-disjoint.
  bool disjoint_homotopic(const Cycle& c1, const Cycle& c2) const;
  // For two vertex-disjoint, two-sided, non-null-homotopic cycles: whether
  // they bound an annulus (equivalently, are homotopic).
  bool bound_annulus(const Cycle& c1, const Cycle& c2) const;

 private:
  Triangulation capped_;
  std::vector<Vertex> apexes_;
};

}  // namespace irrtri
