#include "irrtri/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace irrtri {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_input: return "malformed-input";
    case ErrorCode::invalid_triangulation: return "invalid-triangulation";
    case ErrorCode::no_such_edge: return "no-such-edge";
    case ErrorCode::linking_edge: return "linking-edge";
    case ErrorCode::cycle_touches_boundary: return "cycle-touches-boundary";
    case ErrorCode::non_simple_cycle: return "non-simple-cycle";
    case ErrorCode::not_vertex_disjoint: return "not-vertex-disjoint";
    case ErrorCode::unknown_name: return "unknown-name";
    case ErrorCode::invalid_params: return "invalid-params";
    case ErrorCode::out_of_hypothesis: return "out-of-hypothesis";
    case ErrorCode::not_irreducible: return "not-irreducible";
    case ErrorCode::too_large: return "too-large";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown";
}

Triangle sorted(Triangle t) {
  std::sort(t.begin(), t.end());
  return t;
}

// ==========================================================
// ================      Construction      ==================
// ==========================================================

Triangulation Triangulation::build(int vertex_count, std::vector<Triangle> triangles) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::malformed_input, "negative vertex count");
  }
  for (auto& tri : triangles) {
    for (Vertex x : tri) {
      if (x < 0 || x >= vertex_count) {
        throw Error(ErrorCode::malformed_input,
                    "vertex id " + std::to_string(x) + " out of range [0, " + std::to_string(vertex_count) + ")");
      }
    }
    tri = sorted(tri);
    if (tri[0] == tri[1] || tri[1] == tri[2]) {
      throw Error(ErrorCode::malformed_input, "repeated vertex in triangle (" + std::to_string(tri[0]) + " " +
                                                  std::to_string(tri[1]) + " " + std::to_string(tri[2]) + ")");
    }
  }
  std::sort(triangles.begin(), triangles.end());

  Triangulation t;
  t.vertex_count_ = vertex_count;
  t.triangles_ = std::move(triangles);
  t.vertex_triangles_.assign(vertex_count, {});
  t.neighbors_.assign(vertex_count, {});
  t.boundary_vertex_.assign(vertex_count, 0);

  for (int i = 0; i < t.triangle_count(); ++i) {
    const Triangle& tri = t.triangles_[i];
    for (int k = 0; k < 3; ++k) {
      t.vertex_triangles_[tri[k]].push_back(i);
      t.edges_[Edge(tri[k], tri[(k + 1) % 3])].push_back(i);
    }
  }
  for (const auto& [e, tris] : t.edges_) {
    t.neighbors_[e.u].push_back(e.v);
    t.neighbors_[e.v].push_back(e.u);
    if (tris.size() == 1) {
      t.boundary_vertex_[e.u] = 1;
      t.boundary_vertex_[e.v] = 1;
    }
  }
  for (auto& nb : t.neighbors_) std::sort(nb.begin(), nb.end());
  return t;
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& entry : edges_) out.push_back(entry.first);
  return out;
}

std::span<const int> Triangulation::edge_triangles(Edge e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) return {};
  return it->second;
}

bool Triangulation::has_edge(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_) return false;
  return std::binary_search(neighbors_[a].begin(), neighbors_[a].end(), b);
}

bool Triangulation::has_triangle(Triangle tri) const {
  return std::binary_search(triangles_.begin(), triangles_.end(), sorted(tri));
}

Triangulation relabel(const Triangulation& t, std::span<const Vertex> perm) {
  std::vector<Triangle> tris;
  tris.reserve(t.triangle_count());
  for (const Triangle& tri : t.triangles()) tris.push_back({perm[tri[0]], perm[tri[1]], perm[tri[2]]});
  return Triangulation::build(t.vertex_count(), std::move(tris));
}

// ==========================================================
// ================        Links           ==================
// ==========================================================

namespace {

// Link graph of v: for each link vertex, its (up to several) link neighbors.
std::map<Vertex, std::vector<Vertex>> link_graph(const Triangulation& t, Vertex v) {
  std::map<Vertex, std::vector<Vertex>> graph;
  for (int ti : t.vertex_triangles(v)) {
    const Triangle& tri = t.triangle(ti);
    Vertex a = -1, b = -1;
    for (Vertex x : tri) {
      if (x == v) continue;
      (a < 0 ? a : b) = x;
    }
    graph[a].push_back(b);
    graph[b].push_back(a);
  }
  return graph;
}

}  // namespace

Link vertex_link(const Triangulation& t, Vertex v) {
  auto graph = link_graph(t, v);
  Link link;
  if (graph.empty()) return link;

  Vertex start = graph.begin()->first;
  link.closed = true;
  for (const auto& [x, nb] : graph) {
    if (nb.size() == 1) {
      start = x;
      link.closed = false;
      break;
    }
  }
  Vertex prev = -1;
  Vertex cur = start;
  while (true) {
    link.sequence.push_back(cur);
    const auto& nb = graph[cur];
    Vertex next = -1;
    for (Vertex y : nb) {
      if (y == prev) continue;
      if (next < 0 || (prev < 0 && y < next)) next = y;
    }
    if (next < 0 || next == start || link.sequence.size() >= graph.size()) break;
    prev = cur;
    cur = next;
  }
  return link;
}

// ==========================================================
// ================      Validation        ==================
// ==========================================================

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::empty_complex: return "empty-complex";
    case Axiom::duplicate_triangle: return "duplicate-triangle";
    case Axiom::non_manifold_edge: return "non-manifold-edge";
    case Axiom::isolated_vertex: return "isolated-vertex";
    case Axiom::vertex_link: return "vertex-link";
    case Axiom::disconnected: return "disconnected";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream out;
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << to_string(violations[i].axiom);
    if (!violations[i].witnesses.empty()) {
      out << " [";
      const auto& w = violations[i].witnesses.front();
      for (size_t k = 0; k < w.size(); ++k) out << (k ? " " : "") << w[k];
      out << "]";
    }
  }
  return out.str();
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ValidationReport validate(const Triangulation& t) {
  ValidationReport report;
  auto add = [&](Axiom axiom, std::vector<Vertex> witness) {
    for (auto& v : report.violations) {
      if (v.axiom == axiom) {
        v.witnesses.push_back(std::move(witness));
        return;
      }
    }
    report.violations.push_back({axiom, {std::move(witness)}});
  };

  if (t.vertex_count() == 0 || t.triangle_count() == 0) {
    add(Axiom::empty_complex, {});
    return report;
  }

  auto tris = t.triangles();
  for (size_t i = 1; i < tris.size(); ++i) {
    if (tris[i] == tris[i - 1]) add(Axiom::duplicate_triangle, {tris[i].begin(), tris[i].end()});
  }

  for (const auto& [e, inc] : t.edge_table()) {
    if (inc.size() > 2) add(Axiom::non_manifold_edge, {e.u, e.v});
  }

  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.vertex_triangles(v).empty()) {
      add(Axiom::isolated_vertex, {v});
      continue;
    }
    auto graph = link_graph(t, v);
    int link_edges = 0;
    bool degree_ok = true;
    for (const auto& [x, nb] : graph) {
      link_edges += static_cast<int>(nb.size());
      std::vector<Vertex> uniq(nb);
      std::sort(uniq.begin(), uniq.end());
      if (nb.size() > 2 || std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end()) degree_ok = false;
    }
    link_edges /= 2;
    bool ok = degree_ok;
    if (ok) {
      // Connected + max degree 2 + (cycle or path) edge count.
      std::vector<Vertex> seen{graph.begin()->first};
      std::map<Vertex, bool> visited{{graph.begin()->first, true}};
      for (size_t i = 0; i < seen.size(); ++i) {
        for (Vertex y : graph[seen[i]]) {
          if (!visited[y]) {
            visited[y] = true;
            seen.push_back(y);
          }
        }
      }
      const int link_vertices = static_cast<int>(graph.size());
      ok = static_cast<int>(seen.size()) == link_vertices &&
           (link_edges == link_vertices || link_edges == link_vertices - 1);
    }
    if (!ok) {
      std::vector<Vertex> witness{v};
      for (const auto& entry : graph) witness.push_back(entry.first);
      add(Axiom::vertex_link, std::move(witness));
    }
  }

  std::vector<int> parent(t.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (const Triangle& tri : tris) {
    parent[find_root(parent, tri[1])] = find_root(parent, tri[0]);
    parent[find_root(parent, tri[2])] = find_root(parent, tri[0]);
  }
  std::vector<Vertex> roots;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.vertex_triangles(v).empty()) continue;
    int r = find_root(parent, v);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  if (roots.size() > 1) add(Axiom::disconnected, roots);

  return report;
}

void require_valid(const Triangulation& t) {
  auto report = validate(t);
  if (!report.valid()) {
    throw Error(ErrorCode::invalid_triangulation, "invalid triangulation: " + report.summary());
  }
}

// ==========================================================
// ================    Edge classification   ================
// ==========================================================

bool is_linking_edge(const Triangulation& t, Edge e) {
  return t.edge_triangles(e).size() == 2 && t.is_boundary_vertex(e.u) && t.is_boundary_vertex(e.v);
}

std::vector<EdgeRecord> classify_edges(const Triangulation& t) {
  require_valid(t);
  std::vector<EdgeRecord> out;
  out.reserve(t.edge_count());
  for (const auto& [e, inc] : t.edge_table()) {
    EdgeRecord rec;
    rec.endpoints = e;
    rec.kind = inc.size() == 1 ? EdgeKind::boundary : EdgeKind::interior;
    rec.linking = rec.kind == EdgeKind::interior && t.is_boundary_vertex(e.u) && t.is_boundary_vertex(e.v);
    rec.incident_triangles = inc;
    out.push_back(std::move(rec));
  }
  return out;
}

// ==========================================================
// ================    Canonical form      ==================
// ==========================================================

namespace {

class CanonicalLabeler {
 public:
  explicit CanonicalLabeler(const Triangulation& t) : t_(t), links_(t.vertex_count()) {
    for (Vertex v = 0; v < t.vertex_count(); ++v) links_[v] = vertex_link(t, v);
  }

  // Labeling obtained by rooting at u, labeling v then x (uvx a triangle),
  // then BFS where each processed vertex lists its link starting from its
  // smallest-labeled neighbor, heading towards the smaller-labeled side.
  std::vector<Vertex> label_from(Vertex u, Vertex v, Vertex x) const {
    const int n = t_.vertex_count();
    std::vector<Vertex> label(n, -1);
    std::vector<Vertex> order;
    order.reserve(n);
    label[u] = 0;
    order.push_back(u);
    for (size_t k = 0; k < order.size(); ++k) {
      const Vertex w = order[k];
      Vertex start = v, toward = x;
      if (k > 0) {
        start = -1;
        for (Vertex y : t_.neighbors(w)) {
          if (label[y] >= 0 && (start < 0 || label[y] < label[start])) start = y;
        }
        toward = -1;
        for (Vertex y : link_neighbors(w, start)) {
          if (toward < 0 || label[y] < label[toward]) toward = y;
        }
      }
      for (Vertex y : traverse(w, start, toward)) {
        if (label[y] < 0) {
          label[y] = static_cast<Vertex>(order.size());
          order.push_back(y);
        }
      }
    }
    return label;
  }

  std::vector<Triangle> encode(const std::vector<Vertex>& label) const {
    std::vector<Triangle> code;
    code.reserve(t_.triangle_count());
    for (const Triangle& tri : t_.triangles()) code.push_back(sorted({label[tri[0]], label[tri[1]], label[tri[2]]}));
    std::sort(code.begin(), code.end());
    return code;
  }

  std::vector<Vertex> best_labeling() const {
    // Roots restricted to an isomorphism-invariant vertex class.
    auto key = [&](Vertex v) { return std::pair{t_.degree(v), t_.is_boundary_vertex(v) ? 0 : 1}; };
    auto best_key = key(0);
    for (Vertex v = 1; v < t_.vertex_count(); ++v) best_key = std::min(best_key, key(v));

    std::vector<Triangle> best_code;
    std::vector<Vertex> best_label;
    for (Vertex u = 0; u < t_.vertex_count(); ++u) {
      if (key(u) != best_key) continue;
      for (int ti : t_.vertex_triangles(u)) {
        const Triangle& tri = t_.triangle(ti);
        Vertex a = -1, b = -1;
        for (Vertex y : tri) {
          if (y == u) continue;
          (a < 0 ? a : b) = y;
        }
        for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
          auto label = label_from(u, p, q);
          auto code = encode(label);
          if (best_label.empty() || code < best_code) {
            best_code = std::move(code);
            best_label = std::move(label);
          }
        }
      }
    }
    return best_label;
  }

 private:
  std::vector<Vertex> link_neighbors(Vertex w, Vertex p) const {
    const auto& seq = links_[w].sequence;
    const int d = static_cast<int>(seq.size());
    const int i = static_cast<int>(std::find(seq.begin(), seq.end(), p) - seq.begin());
    std::vector<Vertex> out;
    if (links_[w].closed) {
      out = {seq[(i + 1) % d], seq[(i + d - 1) % d]};
    } else {
      if (i + 1 < d) out.push_back(seq[i + 1]);
      if (i > 0) out.push_back(seq[i - 1]);
    }
    return out;
  }

  std::vector<Vertex> traverse(Vertex w, Vertex p, Vertex q) const {
    const auto& seq = links_[w].sequence;
    const int d = static_cast<int>(seq.size());
    const int i = static_cast<int>(std::find(seq.begin(), seq.end(), p) - seq.begin());
    std::vector<Vertex> out;
    out.reserve(d);
    if (links_[w].closed) {
      const int step = seq[(i + 1) % d] == q ? 1 : d - 1;
      for (int k = 0; k < d; ++k) out.push_back(seq[(i + k * step) % d]);
    } else {
      const bool forward = i + 1 < d && seq[i + 1] == q;
      if (forward) {
        for (int k = i; k < d; ++k) out.push_back(seq[k]);
        for (int k = i - 1; k >= 0; --k) out.push_back(seq[k]);
      } else {
        for (int k = i; k >= 0; --k) out.push_back(seq[k]);
        for (int k = i + 1; k < d; ++k) out.push_back(seq[k]);
      }
    }
    return out;
  }

  const Triangulation& t_;
  std::vector<Link> links_;
};

std::string encode_form(int vertex_count, std::span<const Triangle> tris) {
  std::string out = std::to_string(vertex_count) + ":";
  for (size_t i = 0; i < tris.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tris[i][0]) + "." + std::to_string(tris[i][1]) + "." + std::to_string(tris[i][2]);
  }
  return out;
}

}  // namespace

Triangulation canonical_relabeling(const Triangulation& t) {
  require_valid(t);
  CanonicalLabeler labeler(t);
  return relabel(t, labeler.best_labeling());
}

std::string canonical_form(const Triangulation& t) {
  auto canon = canonical_relabeling(t);
  return encode_form(canon.vertex_count(), canon.triangles());
}

Triangulation from_canonical_form(const std::string& form) {
  auto colon = form.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::malformed_input, "canonical form lacks ':'");
  int n = 0;
  try {
    n = std::stoi(form.substr(0, colon));
  } catch (const std::exception&) {
    throw Error(ErrorCode::malformed_input, "bad vertex count in canonical form");
  }
  std::vector<Triangle> tris;
  std::istringstream in(form.substr(colon + 1));
  std::string item;
  while (std::getline(in, item, ',')) {
    Triangle tri{};
    char dot1 = 0, dot2 = 0;
    std::istringstream tin(item);
    if (!(tin >> tri[0] >> dot1 >> tri[1] >> dot2 >> tri[2]) || dot1 != '.' || dot2 != '.') {
      throw Error(ErrorCode::malformed_input, "bad triangle '" + item + "' in canonical form");
    }
    tris.push_back(tri);
  }
  return Triangulation::build(n, std::move(tris));
}

}  // namespace irrtri
