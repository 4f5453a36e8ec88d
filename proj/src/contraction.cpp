#include "irrtri/contraction.hpp"

#include <algorithm>
#include <random>

namespace irrtri {

namespace {

void require_edge(const Triangulation& t, Edge e) {
  if (t.edge_triangles(e).empty()) {
    throw Error(ErrorCode::no_such_edge, "no edge " + std::to_string(e.u) + " " + std::to_string(e.v));
  }
}

std::vector<Vertex> apexes(const Triangulation& t, Edge e) {
  std::vector<Vertex> out;
  for (int ti : t.edge_triangles(e)) {
    const Triangle& tri = t.triangle(ti);
    out.push_back(tri[0] + tri[1] + tri[2] - e.u - e.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contraction_valid(const Triangulation& t, Edge e, const SurfaceClass& before) {
  auto c = contract(t, e);
  if (!validate(c).valid()) return false;
  return classify_surface(c) == before;
}

}  // namespace

Contraction contract_edge(const Triangulation& t, Edge e) {
  require_edge(t, e);
  if (is_linking_edge(t, e)) {
    throw Error(ErrorCode::linking_edge, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is linking");
  }
  Contraction out;
  out.survivor = e.u;
  out.removed = e.v;
  if (t.is_boundary_vertex(e.v) && !t.is_boundary_vertex(e.u)) std::swap(out.survivor, out.removed);

  auto shift = [&](Vertex x) {
    if (x == out.removed) x = out.survivor;
    return x > out.removed ? x - 1 : x;
  };
  std::vector<Triangle> tris;
  tris.reserve(t.triangle_count());
  for (const Triangle& tri : t.triangles()) {
    const bool has_u = std::find(tri.begin(), tri.end(), e.u) != tri.end();
    const bool has_v = std::find(tri.begin(), tri.end(), e.v) != tri.end();
    if (has_u && has_v) continue;
    tris.push_back({shift(tri[0]), shift(tri[1]), shift(tri[2])});
  }
  out.result = Triangulation::build(t.vertex_count() - 1, std::move(tris));
  return out;
}

Triangulation contract(const Triangulation& t, Edge e) { return contract_edge(t, e).result; }

bool link_condition(const Triangulation& t, Edge e) {
  require_edge(t, e);
  if (is_linking_edge(t, e)) return false;
  auto nu = t.neighbors(e.u);
  auto nv = t.neighbors(e.v);
  std::vector<Vertex> common;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
  return common == apexes(t, e);
}

bool is_contractible(const Triangulation& t, Edge e) {
  if (t.edge_triangles(e).empty() || is_linking_edge(t, e)) return false;
  return contraction_valid(t, e, classify_surface(t));
}

std::vector<Edge> contractible_edges(const Triangulation& t) {
  const auto before = classify_surface(t);
  std::vector<Edge> out;
  for (const auto& [e, inc] : t.edge_table()) {
    // The link condition is necessary; the oracle decides.
    if (link_condition(t, e) && contraction_valid(t, e, before)) out.push_back(e);
  }
  return out;
}

Reduction reduce_to_irreducible(const Triangulation& t, ReductionPolicy policy) {
  const auto cls = classify_surface(t);
  Reduction out;
  out.trace.initial_form = canonical_form(t);
  Triangulation cur = t;
  std::mt19937_64 rng(policy.seed);

  while (true) {
    Edge chosen;
    bool found = false;
    if (policy.kind == ReductionPolicy::Kind::first) {
      for (const auto& [e, inc] : cur.edge_table()) {
        if (link_condition(cur, e) && contraction_valid(cur, e, cls)) {
          chosen = e;
          found = true;
          break;
        }
      }
    } else {
      // The first contractible edge of a uniformly random order is uniform
      // among the contractible edges.
      auto order = cur.edges();
      std::shuffle(order.begin(), order.end(), rng);
      for (Edge e : order) {
        if (link_condition(cur, e) && contraction_valid(cur, e, cls)) {
          chosen = e;
          found = true;
          break;
        }
      }
    }
    if (!found) break;

    auto step = contract_edge(cur, chosen);
    const bool boundary_rule = cur.is_boundary_vertex(step.survivor) && !cur.is_boundary_vertex(step.removed);
    out.trace.steps.push_back({chosen, step.survivor, boundary_rule ? "kept boundary endpoint" : "kept lower id"});
    cur = std::move(step.result);
  }
  out.trace.final_form = canonical_form(cur);
  out.result = std::move(cur);
  return out;
}

Triangulation replay(const Triangulation& t, const ContractionTrace& trace) {
  Triangulation cur = t;
  for (const auto& step : trace.steps) cur = contract(cur, step.edge);
  return cur;
}

}  // namespace irrtri
