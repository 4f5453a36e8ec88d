#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irrtri/surface.hpp"
#include "irrtri/triangulation.hpp"

namespace irrtri {

struct Contraction {
  Triangulation result;
  // Id of the merged vertex in pre-contraction labels. The other endpoint is
  // removed and every id above it shifts down by one.
  Vertex survivor = -1;
  Vertex removed = -1;
};

// Identifies the endpoints of e. When exactly one endpoint is on the
// boundary, that endpoint survives; otherwise the smaller id does. The result
// is not validated. Throws no_such_edge or linking_edge.
Contraction contract_edge(const Triangulation& t, Edge e);
Triangulation contract(const Triangulation& t, Edge e);

// Not linking, and the common neighbors of the endpoints are exactly the
// apexes of the incident triangles. Throws no_such_edge.
bool link_condition(const Triangulation& t, Edge e);

// Exact: the contraction yields a valid triangulation of the same surface.
bool is_contractible(const Triangulation& t, Edge e);

std::vector<Edge> contractible_edges(const Triangulation& t);

inline bool is_irreducible(const Triangulation& t) { return contractible_edges(t).empty(); }

struct ReductionPolicy {
  enum class Kind { first, random };
  Kind kind = Kind::first;
  std::uint64_t seed = 0;

  static ReductionPolicy first() { return {Kind::first, 0}; }
  static ReductionPolicy random(std::uint64_t seed) { return {Kind::random, seed}; }
};

struct TraceStep {
  Edge edge;
  Vertex survivor = -1;
  std::string note;
};

struct ContractionTrace {
  std::vector<TraceStep> steps;
  std::string initial_form;
  std::string final_form;
};

struct Reduction {
  Triangulation result;
  ContractionTrace trace;
};

Reduction reduce_to_irreducible(const Triangulation& t, ReductionPolicy policy);

// Re-applies the trace's contractions starting from t.
Triangulation replay(const Triangulation& t, const ContractionTrace& trace);

}  // namespace irrtri
