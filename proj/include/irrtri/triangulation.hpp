#pragma once

#include <array>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "irrtri/error.hpp"

namespace irrtri {

using Vertex = int;

// Vertex triple; stored sorted ascending once inside a Triangulation.
using Triangle = std::array<Vertex, 3>;

// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

Triangle sorted(Triangle t);

// A 2-dimensional simplicial complex given by its triangles. Values are
// immutable once built; derived incidence tables are computed eagerly.
// Construction rejects malformed triples only; surface axioms are checked by
// validate().
class Triangulation {
 public:
  using EdgeTable = std::map<Edge, std::vector<int>>;

  Triangulation() = default;

  // Throws Error(malformed_input) on out-of-range or repeated ids in a triple.
  static Triangulation build(int vertex_count, std::vector<Triangle> triangles);

  int vertex_count() const { return vertex_count_; }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Triangle> triangles() const { return triangles_; }
  const Triangle& triangle(int index) const { return triangles_[index]; }
  const EdgeTable& edge_table() const { return edges_; }
  std::vector<Edge> edges() const;

  // Indices of the triangles containing e; empty if e is not an edge.
  std::span<const int> edge_triangles(Edge e) const;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_triangle(Triangle t) const;

  std::span<const int> vertex_triangles(Vertex v) const { return vertex_triangles_[v]; }
  // Sorted graph neighbors.
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors_[v].size()); }

  // A vertex is on the boundary iff it lies on an edge with exactly one triangle.
  bool is_boundary_vertex(Vertex v) const { return boundary_vertex_[v] != 0; }
  bool is_boundary_edge(Edge e) const { return edge_triangles(e).size() == 1; }

  // Euler characteristic |V| - |E| + |F|.
  int euler_characteristic() const { return vertex_count_ - edge_count() + triangle_count(); }

  bool operator==(const Triangulation& other) const {
    return vertex_count_ == other.vertex_count_ && triangles_ == other.triangles_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Triangle> triangles_;
  EdgeTable edges_;
  std::vector<std::vector<int>> vertex_triangles_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<char> boundary_vertex_;
};

// Ordered link of a vertex: a cyclic sequence (closed) for interior vertices,
// or a path listed from its smaller endpoint for boundary vertices. Only
// meaningful on a valid triangulation.
struct Link {
  std::vector<Vertex> sequence;
  bool closed = false;
};

Link vertex_link(const Triangulation& t, Vertex v);

enum class Axiom {
  empty_complex,
  duplicate_triangle,
  non_manifold_edge,
  isolated_vertex,
  vertex_link,
  disconnected,
};

const char* to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  // Simplices witnessing the violation (vertex lists).
  std::vector<std::vector<Vertex>> witnesses;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const Triangulation& t);

// Throws Error(invalid_triangulation) carrying the first violation.
void require_valid(const Triangulation& t);

enum class EdgeKind { boundary, interior };

struct EdgeRecord {
  Edge endpoints;
  EdgeKind kind = EdgeKind::interior;
  // Interior edge with both endpoints on the boundary.
  bool linking = false;
  std::vector<int> incident_triangles;
};

// Throws Error(invalid_triangulation) if t is not valid.
std::vector<EdgeRecord> classify_edges(const Triangulation& t);

// Cheap single-edge version; no validation.
bool is_linking_edge(const Triangulation& t, Edge e);

// Canonical string: equal for two valid connected triangulations iff they are
// isomorphic as simplicial complexes (reflections included).
std::string canonical_form(const Triangulation& t);

// The relabeled triangulation whose sorted triangle list the canonical form encodes.
Triangulation canonical_relabeling(const Triangulation& t);

// Inverse of canonical_form's encoding.
Triangulation from_canonical_form(const std::string& form);

// Relabels vertex v to perm[v].
Triangulation relabel(const Triangulation& t, std::span<const Vertex> perm);

}  // namespace irrtri
