#include "irrtri/surface.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace irrtri {

std::string SurfaceClass::to_string() const {
  return std::string(orientable ? "orientable" : "nonorientable") + " " + std::to_string(euler_genus) + " " +
         std::to_string(boundary_count) + " " + std::to_string(euler_characteristic);
}

std::vector<std::vector<Vertex>> boundary_walks(const Triangulation& t) {
  std::vector<std::vector<Vertex>> adjacent(t.vertex_count());
  for (const auto& [e, inc] : t.edge_table()) {
    if (inc.size() != 1) continue;
    adjacent[e.u].push_back(e.v);
    adjacent[e.v].push_back(e.u);
  }
  for (auto& a : adjacent) std::sort(a.begin(), a.end());

  std::vector<char> visited(t.vertex_count(), 0);
  std::vector<std::vector<Vertex>> walks;
  for (Vertex start = 0; start < t.vertex_count(); ++start) {
    if (visited[start] || adjacent[start].empty()) continue;
    std::vector<Vertex> walk;
    Vertex prev = -1, cur = start;
    while (!visited[cur]) {
      visited[cur] = 1;
      walk.push_back(cur);
      Vertex next = -1;
      for (Vertex y : adjacent[cur]) {
        if (y != prev) {
          next = y;
          break;
        }
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    walks.push_back(std::move(walk));
  }
  return walks;
}

namespace {

bool has_directed(const Triangle& tri, Vertex a, Vertex b) {
  for (int k = 0; k < 3; ++k) {
    if (tri[k] == a && tri[(k + 1) % 3] == b) return true;
  }
  return false;
}

int triangle_index(const Triangulation& t, Triangle tri) {
  auto tris = t.triangles();
  auto it = std::lower_bound(tris.begin(), tris.end(), sorted(tri));
  return it != tris.end() && *it == sorted(tri) ? static_cast<int>(it - tris.begin()) : -1;
}

}  // namespace

std::optional<std::vector<Triangle>> coherent_orientation(const Triangulation& t) {
  const int f = t.triangle_count();
  std::vector<Triangle> oriented(t.triangles().begin(), t.triangles().end());
  std::vector<char> assigned(f, 0);
  for (int seed = 0; seed < f; ++seed) {
    if (assigned[seed]) continue;
    assigned[seed] = 1;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      const Triangle tri = oriented[i];
      for (int k = 0; k < 3; ++k) {
        const Vertex a = tri[k], b = tri[(k + 1) % 3];
        for (int j : t.edge_triangles(Edge(a, b))) {
          if (j == i) continue;
          if (!assigned[j]) {
            const Triangle& other = t.triangle(j);
            Vertex c = other[0] + other[1] + other[2] - a - b;
            oriented[j] = {b, a, c};
            assigned[j] = 1;
            queue.push_back(j);
          } else if (!has_directed(oriented[j], b, a)) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return oriented;
}

SurfaceClass classify_surface(const Triangulation& t) {
  require_valid(t);
  SurfaceClass s;
  s.euler_characteristic = t.euler_characteristic();
  s.boundary_count = static_cast<int>(boundary_walks(t).size());
  s.orientable = coherent_orientation(t).has_value();
  s.euler_genus = 2 - s.boundary_count - s.euler_characteristic;
  return s;
}

// ==========================================================
// ================        Cutting         ==================
// ==========================================================

int CutResult::copy_count(int cycle_index) const {
  int count = 0;
  for (const auto& src : copy_source) count += static_cast<int>(std::count(src.begin(), src.end(), cycle_index));
  return count;
}

namespace {

void check_cycles(const Triangulation& t, std::span<const Cycle> cycles) {
  std::set<Vertex> used;
  for (const Cycle& c : cycles) {
    const auto& vs = c.vertices;
    const int k = static_cast<int>(vs.size());
    if (k < 3) throw Error(ErrorCode::non_simple_cycle, "cycle shorter than 3");
    std::set<Vertex> distinct(vs.begin(), vs.end());
    if (static_cast<int>(distinct.size()) != k) throw Error(ErrorCode::non_simple_cycle, "cycle repeats a vertex");
    for (int i = 0; i < k; ++i) {
      if (vs[i] < 0 || vs[i] >= t.vertex_count()) throw Error(ErrorCode::non_simple_cycle, "cycle vertex out of range");
      if (!t.has_edge(vs[i], vs[(i + 1) % k])) {
        throw Error(ErrorCode::non_simple_cycle, "consecutive cycle vertices " + std::to_string(vs[i]) + " " +
                                                     std::to_string(vs[(i + 1) % k]) + " are not adjacent");
      }
    }
    for (Vertex v : vs) {
      if (t.is_boundary_vertex(v)) {
        throw Error(ErrorCode::cycle_touches_boundary, "cycle vertex " + std::to_string(v) + " is on the boundary");
      }
      if (!used.insert(v).second) throw Error(ErrorCode::not_vertex_disjoint, "cycles share vertex " + std::to_string(v));
    }
  }
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

CutResult cut_along_cycles(const Triangulation& t, std::span<const Cycle> cycles) {
  require_valid(t);
  check_cycles(t, cycles);

  const int n = t.vertex_count();
  // (cycle vertex, triangle index) -> replacement vertex id.
  std::map<std::pair<Vertex, int>, Vertex> replacement;
  std::vector<Vertex> copy_origin;  // new id - n -> original vertex
  std::vector<int> cycle_of(n, -1);

  for (size_t ci = 0; ci < cycles.size(); ++ci) {
    const auto& vs = cycles[ci].vertices;
    const int k = static_cast<int>(vs.size());
    for (int i = 0; i < k; ++i) {
      const Vertex v = vs[i], prev = vs[(i + k - 1) % k], next = vs[(i + 1) % k];
      cycle_of[v] = static_cast<int>(ci);
      const Link link = vertex_link(t, v);
      const auto& seq = link.sequence;
      const int d = static_cast<int>(seq.size());
      const int ip = static_cast<int>(std::find(seq.begin(), seq.end(), prev) - seq.begin());
      const int in = static_cast<int>(std::find(seq.begin(), seq.end(), next) - seq.begin());
      const Vertex copy = n + static_cast<Vertex>(copy_origin.size());
      copy_origin.push_back(v);
      // Fan from prev forward to next keeps the original id; the other fan gets the copy.
      bool first_fan = true;
      for (int s = 0; s < d; ++s) {
        const int j = (ip + s) % d;
        if (j == in) first_fan = false;
        const int tri = triangle_index(t, {v, seq[j], seq[(j + 1) % d]});
        replacement[{v, tri}] = first_fan ? v : copy;
      }
    }
  }

  const int total = n + static_cast<int>(copy_origin.size());
  std::vector<Triangle> cut_tris;
  cut_tris.reserve(t.triangle_count());
  for (int i = 0; i < t.triangle_count(); ++i) {
    Triangle tri = t.triangle(i);
    for (Vertex& x : tri) {
      if (cycle_of[x] >= 0) x = replacement.at({x, i});
    }
    cut_tris.push_back(tri);
  }

  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Triangle& tri : cut_tris) {
    parent[find_root(parent, tri[1])] = find_root(parent, tri[0]);
    parent[find_root(parent, tri[2])] = find_root(parent, tri[0]);
  }
  auto original_of = [&](Vertex x) { return x < n ? x : copy_origin[x - n]; };

  std::map<int, int> component_of_root;
  std::vector<std::vector<Vertex>> members;
  for (Vertex x = 0; x < total; ++x) {
    const int r = find_root(parent, x);
    auto [it, inserted] = component_of_root.try_emplace(r, static_cast<int>(members.size()));
    if (inserted) members.emplace_back();
    members[it->second].push_back(x);
  }

  CutResult result;
  std::vector<int> local(total, -1);
  std::vector<std::vector<Triangle>> comp_tris(members.size());
  for (size_t c = 0; c < members.size(); ++c) {
    for (size_t i = 0; i < members[c].size(); ++i) local[members[c][i]] = static_cast<int>(i);
  }
  for (const Triangle& tri : cut_tris) {
    const int c = component_of_root.at(find_root(parent, tri[0]));
    comp_tris[c].push_back({local[tri[0]], local[tri[1]], local[tri[2]]});
  }
  for (size_t c = 0; c < members.size(); ++c) {
    auto comp = Triangulation::build(static_cast<int>(members[c].size()), std::move(comp_tris[c]));
    std::vector<Vertex> to_orig;
    for (Vertex x : members[c]) to_orig.push_back(original_of(x));
    std::vector<std::vector<Vertex>> copies;
    std::vector<int> sources;
    for (auto& walk : boundary_walks(comp)) {
      const int src = cycle_of[to_orig[walk.front()]];
      if (src < 0) continue;
      copies.push_back(std::move(walk));
      sources.push_back(src);
    }
    result.components.push_back(std::move(comp));
    result.copies.push_back(std::move(copies));
    result.copy_source.push_back(std::move(sources));
    result.to_original.push_back(std::move(to_orig));
  }
  return result;
}

CutResult cut_along_cycle(const Triangulation& t, const Cycle& c) { return cut_along_cycles(t, std::span(&c, 1)); }

Sidedness cycle_sidedness(const Triangulation& t, const Cycle& c) {
  return cut_along_cycle(t, c).copy_count(0) == 2 ? Sidedness::two_sided : Sidedness::one_sided;
}

namespace {

bool touches(const CutResult& cut, size_t component, std::span<const Vertex> forbidden) {
  for (Vertex x : cut.to_original[component]) {
    if (std::find(forbidden.begin(), forbidden.end(), x) != forbidden.end()) return true;
  }
  return false;
}

bool null_homotopic_avoiding(const Triangulation& t, const Cycle& c, std::span<const Vertex> forbidden) {
  auto cut = cut_along_cycle(t, c);
  if (cut.copy_count(0) != 2) return false;
  for (size_t i = 0; i < cut.components.size(); ++i) {
    if (cut.copies[i].size() != 1 || touches(cut, i, forbidden)) continue;
    auto cls = classify_surface(cut.components[i]);
    if (cls.orientable && cls.euler_genus == 0 && cls.boundary_count == 1) return true;
  }
  return false;
}

bool annulus_between(const Triangulation& t, const Cycle& c1, const Cycle& c2, std::span<const Vertex> forbidden) {
  const Cycle both[] = {c1, c2};
  auto cut = cut_along_cycles(t, both);
  for (size_t i = 0; i < cut.components.size(); ++i) {
    const auto& src = cut.copy_source[i];
    if (src.size() != 2 || src[0] == src[1] || touches(cut, i, forbidden)) continue;
    auto cls = classify_surface(cut.components[i]);
    if (cls.orientable && cls.euler_genus == 0 && cls.boundary_count == 2) return true;
  }
  return false;
}

bool disjoint_homotopic_avoiding(const Triangulation& t, const Cycle& c1, const Cycle& c2,
                                 std::span<const Vertex> forbidden) {
  const Cycle both[] = {c1, c2};
  check_cycles(t, both);
  if (cycle_sidedness(t, c1) != Sidedness::two_sided || cycle_sidedness(t, c2) != Sidedness::two_sided) return false;
  const bool null1 = null_homotopic_avoiding(t, c1, forbidden);
  const bool null2 = null_homotopic_avoiding(t, c2, forbidden);
  if (null1 || null2) return null1 && null2;
  return annulus_between(t, c1, c2, forbidden);
}

}  // namespace

bool is_null_homotopic(const Triangulation& t, const Cycle& c) { return null_homotopic_avoiding(t, c, {}); }

bool disjoint_cycles_homotopic(const Triangulation& t, const Cycle& c1, const Cycle& c2) {
  return disjoint_homotopic_avoiding(t, c1, c2, {});
}

std::vector<ThreeCycle> enumerate_3cycles(const Triangulation& t) {
  std::vector<ThreeCycle> out;
  for (const auto& [e, inc] : t.edge_table()) {
    auto nu = t.neighbors(e.u);
    auto nv = t.neighbors(e.v);
    std::vector<Vertex> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    for (Vertex w : common) {
      if (w <= e.v) continue;
      out.push_back({{e.u, e.v, w}, t.has_triangle({e.u, e.v, w})});
    }
  }
  std::sort(out.begin(), out.end(), [](const ThreeCycle& a, const ThreeCycle& b) { return a.vertices < b.vertices; });
  return out;
}

// ==========================================================
// ================    Capped homotopy     ==================
// ==========================================================

CappedHomotopy::CappedHomotopy(const Triangulation& t) {
  require_valid(t);
  std::vector<Triangle> tris(t.triangles().begin(), t.triangles().end());
  Vertex next = t.vertex_count();
  for (const auto& walk : boundary_walks(t)) {
    const Vertex apex = next++;
    apexes_.push_back(apex);
    for (size_t i = 0; i < walk.size(); ++i) tris.push_back({apex, walk[i], walk[(i + 1) % walk.size()]});
  }
  capped_ = Triangulation::build(next, std::move(tris));
}

Sidedness CappedHomotopy::sidedness(const Cycle& c) const { return cycle_sidedness(capped_, c); }

bool CappedHomotopy::null_homotopic(const Cycle& c) const { return null_homotopic_avoiding(capped_, c, apexes_); }

bool CappedHomotopy::disjoint_homotopic(const Cycle& c1, const Cycle& c2) const {
  return disjoint_homotopic_avoiding(capped_, c1, c2, apexes_);
}

bool CappedHomotopy::bound_annulus(const Cycle& c1, const Cycle& c2) const {
  return annulus_between(capped_, c1, c2, apexes_);
}

}  // namespace irrtri
