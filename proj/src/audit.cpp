#include "irrtri/audit.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

#include "irrtri/contraction.hpp"

namespace irrtri {

namespace {

using Mask = std::uint64_t;

std::string edge_text(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string cycle_text(const std::array<Vertex, 3>& v) {
  return std::to_string(v[0]) + "-" + std::to_string(v[1]) + "-" + std::to_string(v[2]);
}

CheckRecord inequality(std::string id, std::string title, std::int64_t lhs, std::int64_t rhs) {
  CheckRecord r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.status = lhs <= rhs ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckRecord skipped(std::string id, std::string title, std::string note) {
  CheckRecord r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.status = CheckStatus::skipped;
  r.note = std::move(note);
  return r;
}

void check_consistent(int g, int b, bool orientable) {
  if (g < 0 || b < 0 || (orientable && g % 2 != 0) || (!orientable && g == 0)) {
    throw Error(ErrorCode::invalid_params, "no surface with g=" + std::to_string(g) + " b=" + std::to_string(b) +
                                               (orientable ? " orientable" : " nonorientable"));
  }
}

std::vector<Mask> adjacency(const Triangulation& t) {
  std::vector<Mask> adj(t.vertex_count(), 0);
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    for (Vertex w : t.neighbors(v)) adj[v] |= Mask{1} << w;
  }
  return adj;
}

Mask lowest(Mask m) { return m & (~m + 1); }
int index_of(Mask bit) { return std::countr_zero(bit); }

// Vertex sets of the connected components of the graph induced on `alive`.
std::vector<Mask> components(const std::vector<Mask>& adj, Mask alive) {
  std::vector<Mask> out;
  while (alive) {
    Mask comp = lowest(alive);
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[index_of(lowest(f))];
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    alive &= ~comp;
  }
  return out;
}

class MatchingSearch {
 public:
  explicit MatchingSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

  int run(Mask alive, int lower) {
    best_ = lower;
    search(alive, 0);
    return best_;
  }

 private:
  int bound(Mask alive) const {
    int ub = 0;
    for (Mask c : components(adj_, alive)) ub += std::popcount(c) / 2;
    return ub;
  }

  void search(Mask alive, int size) {
    // isolated vertices never get matched
    for (Mask a = alive; a; a &= a - 1) {
      Mask bit = lowest(a);
      if ((adj_[index_of(bit)] & alive) == 0) alive &= ~bit;
    }
    if (!alive) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + bound(alive) <= best_) return;
    int v = -1;
    int min_deg = 1 << 30;
    for (Mask a = alive; a; a &= a - 1) {
      int x = index_of(lowest(a));
      int d = std::popcount(adj_[x] & alive);
      if (d < min_deg) {
        min_deg = d;
        v = x;
      }
    }
    const Mask vb = Mask{1} << v;
    for (Mask n = adj_[v] & alive; n; n &= n - 1) {
      const Mask ub = lowest(n);
      search(alive & ~vb & ~ub, size + 1);
    }
    search(alive & ~vb, size);
  }

  std::vector<Mask> adj_;
  int best_ = 0;
};

int greedy_matching(const Triangulation& t) {
  std::vector<char> used(t.vertex_count(), 0);
  int size = 0;
  for (const auto& [e, inc] : t.edge_table()) {
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = 1;
    ++size;
  }
  return size;
}

// Largest subset of `members` whose cycles are pairwise vertex-disjoint.
int max_disjoint(const std::vector<ThreeCycle>& cycles, const std::vector<int>& members) {
  const int k = static_cast<int>(members.size());
  std::vector<std::vector<char>> clash(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const auto& a = cycles[members[i]].vertices;
      const auto& b = cycles[members[j]].vertices;
      for (Vertex x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) clash[i][j] = 1;
      }
    }
  }
  int best = 0;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (static_cast<int>(chosen.size()) + (k - from) <= best) return;
    for (int i = from; i < k; ++i) {
      bool ok = std::none_of(chosen.begin(), chosen.end(), [&](int c) { return clash[c][i]; });
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

CheckRecord degree_check(const Triangulation& t) {
  CheckRecord r;
  r.id = "a";
  r.title = "interior vertex degree at least four";
  int min_deg = -1;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.is_boundary_vertex(v)) continue;
    if (min_deg < 0 || t.degree(v) < min_deg) min_deg = t.degree(v);
    if (t.degree(v) < 4) r.witnesses.push_back(std::to_string(v));
  }
  if (min_deg < 0) {
    r.status = CheckStatus::pass;
    r.note = "no interior vertex";
    return r;
  }
  r.lhs = 4;
  r.rhs = min_deg;
  r.slack = min_deg - 4;
  r.status = r.witnesses.empty() ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckRecord three_cycle_check(const Triangulation& t, const std::vector<ThreeCycle>& cycles,
                              const std::vector<char>& essential) {
  CheckRecord r;
  r.id = "b";
  r.title = "every non-linking edge lies on a non-null-homotopic 3-cycle";
  int covered = 0;
  int total = 0;
  for (const auto& [e, inc] : t.edge_table()) {
    if (is_linking_edge(t, e)) continue;
    ++total;
    bool found = false;
    for (size_t i = 0; i < cycles.size() && !found; ++i) {
      const auto& v = cycles[i].vertices;
      const bool has_u = std::find(v.begin(), v.end(), e.u) != v.end();
      const bool has_v = std::find(v.begin(), v.end(), e.v) != v.end();
      found = has_u && has_v && essential[i];
    }
    if (found) {
      ++covered;
    } else {
      r.witnesses.push_back(edge_text(e));
    }
  }
  r.lhs = total;
  r.rhs = covered;
  r.slack = covered - total;
  r.status = covered == total ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckRecord homotopy_family_check(const CappedHomotopy& capped, const std::vector<ThreeCycle>& cycles,
                                  const std::vector<char>& essential) {
  CheckRecord r;
  r.id = "g";
  r.title = "at most nine pairwise disjoint homotopic 3-cycles";
  std::vector<int> pool;
  for (size_t i = 0; i < cycles.size(); ++i) {
    if (essential[i] && capped.sidedness(cycles[i].cycle()) == Sidedness::two_sided) pool.push_back(static_cast<int>(i));
  }
  std::vector<int> parent(cycles.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (size_t x = 0; x < pool.size(); ++x) {
    for (size_t y = x + 1; y < pool.size(); ++y) {
      const auto& a = cycles[pool[x]].vertices;
      const auto& b = cycles[pool[y]].vertices;
      int shared_vertices = 0;
      for (Vertex v : a) shared_vertices += std::count(b.begin(), b.end(), v);
      if (shared_vertices == 0) {
        if (capped.bound_annulus(cycles[pool[x]].cycle(), cycles[pool[y]].cycle())) {
          parent[find_root(parent, pool[x])] = find_root(parent, pool[y]);
        }
      } else if (shared_vertices == 1) {
        ++r.undecided;
      }
    }
  }
  std::map<int, std::vector<int>> classes;
  for (int i : pool) classes[find_root(parent, i)].push_back(i);
  int worst = 0;
  for (const auto& [root, members] : classes) {
    const int size = max_disjoint(cycles, members);
    if (size > worst) {
      worst = size;
      r.witnesses.clear();
      for (int m : members) r.witnesses.push_back(cycle_text(cycles[m].vertices));
    }
  }
  if (worst <= 9) r.witnesses.clear();
  r.lhs = worst;
  r.rhs = 9;
  r.slack = 9 - worst;
  r.status = worst <= 9 ? CheckStatus::pass : CheckStatus::fail;
  if (r.undecided > 0) r.note = "vertex-sharing pairs not decided";
  return r;
}

}  // namespace

std::int64_t closed_surface_bound(int g) {
  if (g < 1) throw Error(ErrorCode::invalid_params, "closed surface bound needs g >= 1");
  switch (g) {
    case 1: return 55;
    case 2: return 194;
    case 3: return 333;
    default: return 163LL * g - 164;
  }
}

BoundTable bound_table(int g, int b, bool orientable) {
  check_consistent(g, b, orientable);
  if (g == 0 && b <= 1) {
    throw Error(ErrorCode::out_of_hypothesis, "bounds need g >= 1 or b >= 2");
  }
  BoundTable out;
  out.g = g;
  out.b = b;
  out.orientable = orientable;
  out.projective_special = !orientable && g == 1 && b == 0;
  out.thm1 = out.projective_special ? 186 : 570LL * g + 385LL * b - 573;
  out.prop1_matching = out.projective_special ? 27 : 81LL * g + 54LL * b - 81;
  if (b == 0) {
    out.thm2_f = closed_surface_bound(g);
    out.jw_reference = std::max<std::int64_t>(13LL * g - 4, 4);
  }
  return out;
}

MatchingCertificate build_matching_certificate(const Triangulation& t) {
  require_valid(t);
  MatchingCertificate cert;
  std::vector<char> used(t.vertex_count(), 0);
  auto take = [&](Vertex a, Vertex b, MatchPhase phase) {
    used[a] = used[b] = 1;
    cert.m.push_back({Edge(a, b), phase});
  };
  for (const auto& walk : boundary_walks(t)) {
    const size_t len = walk.size();
    size_t start = 0;
    if (len % 2 == 1) {
      cert.w.push_back(walk[0]);
      used[walk[0]] = 1;
      start = 1;
    }
    for (size_t i = start; i + 1 < len; i += 2) take(walk[i], walk[i + 1], MatchPhase::boundary);
  }
  std::sort(cert.w.begin(), cert.w.end());
  for (const auto& [e, inc] : t.edge_table()) {
    if (used[e.u] || used[e.v] || is_linking_edge(t, e)) continue;
    take(e.u, e.v, MatchPhase::extension);
  }
  cert.linking_free = std::none_of(cert.m.begin(), cert.m.end(), [&](const MatchedEdge& me) { return is_linking_edge(t, me.edge); });
  cert.maximal = true;
  for (const auto& [e, inc] : t.edge_table()) {
    if (!used[e.u] && !used[e.v] && !is_linking_edge(t, e)) cert.maximal = false;
  }
  return cert;
}

std::vector<std::string> certificate_violations(const Triangulation& t, const MatchingCertificate& cert) {
  std::vector<std::string> out;
  std::vector<int> cover(t.vertex_count(), 0);
  for (const auto& me : cert.m) {
    if (!t.has_edge(me.edge.u, me.edge.v)) {
      out.push_back("not an edge: " + edge_text(me.edge));
      continue;
    }
    if (is_linking_edge(t, me.edge)) out.push_back("linking edge in M: " + edge_text(me.edge));
    ++cover[me.edge.u];
    ++cover[me.edge.v];
  }
  std::vector<char> in_w(t.vertex_count(), 0);
  for (Vertex w : cert.w) {
    in_w[w] = 1;
    if (cover[w] > 0) out.push_back("W vertex covered: " + std::to_string(w));
  }
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (cover[v] > 1) out.push_back("vertex matched twice: " + std::to_string(v));
    if (t.is_boundary_vertex(v) && !in_w[v] && cover[v] == 0) {
      out.push_back("boundary vertex neither in W nor covered: " + std::to_string(v));
    }
  }
  const auto walks = boundary_walks(t);
  int odd = 0;
  for (const auto& walk : walks) {
    if (walk.size() % 2 == 0) continue;
    ++odd;
    int hits = 0;
    for (Vertex v : walk) hits += in_w[v];
    if (hits != 1) out.push_back("odd boundary walk without exactly one W vertex");
  }
  if (cert.size_w() != odd) out.push_back("|W| differs from the number of odd boundary walks");
  if (cert.size_w() > static_cast<int>(walks.size())) out.push_back("|W| exceeds b");
  for (const auto& [e, inc] : t.edge_table()) {
    if (cover[e.u] == 0 && cover[e.v] == 0 && !in_w[e.u] && !in_w[e.v] && !is_linking_edge(t, e)) {
      out.push_back("matching not maximal: " + edge_text(e) + " can be added");
      break;
    }
  }
  return out;
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::undecided: return "undecided";
  }
  return "?";
}

bool AuditReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
}

const CheckRecord* AuditReport::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

AuditReport audit(const Triangulation& t) {
  require_valid(t);
  if (auto ce = contractible_edges(t); !ce.empty()) {
    throw Error(ErrorCode::not_irreducible, "contractible edge " + edge_text(ce.front()));
  }
  AuditReport report;
  report.surface = classify_surface(t);
  report.vertex_count = t.vertex_count();
  const int g = report.surface.euler_genus;
  const int b = report.surface.boundary_count;
  const bool catalog_mode = report.surface.is_sphere_or_disk();
  const auto cert = build_matching_certificate(t);
  report.matching_size = cert.size_m();
  report.w_size = cert.size_w();
  const std::string catalog_note = "sphere or disk: outside the lemma's hypothesis";

  if (catalog_mode) {
    report.checks.push_back(skipped("a", "interior vertex degree at least four", catalog_note));
    report.checks.push_back(skipped("b", "every non-linking edge lies on a non-null-homotopic 3-cycle", catalog_note));
    report.checks.push_back(skipped("c", "matching size bound", catalog_note));
  } else {
    const BoundTable bounds = bound_table(g, b, report.surface.orientable);
    report.jw_reference = bounds.jw_reference;
    const CappedHomotopy capped(t);
    const auto cycles = enumerate_3cycles(t);
    std::vector<char> essential(cycles.size());
    for (size_t i = 0; i < cycles.size(); ++i) essential[i] = !cycles[i].facial && !capped.null_homotopic(cycles[i].cycle());
    report.checks.push_back(degree_check(t));
    report.checks.push_back(three_cycle_check(t, cycles, essential));
    report.checks.push_back(inequality("c", "matching size bound", cert.size_m(), bounds.prop1_matching));
    auto d = inequality("d", "vertex bound from matching", t.vertex_count(),
                        7LL * cert.size_m() + 4LL * cert.size_w() + 3LL * g + 3LL * b - 6);
    report.checks.push_back(std::move(d));
    report.checks.push_back(inequality("e", "vertex bound in g and b", t.vertex_count(), bounds.thm1));
    if (bounds.thm2_f) {
      report.checks.push_back(inequality("f", "closed surface vertex bound", t.vertex_count(), *bounds.thm2_f));
    } else {
      report.checks.push_back(skipped("f", "closed surface vertex bound", "surface has boundary"));
    }
    report.checks.push_back(homotopy_family_check(capped, cycles, essential));
    return report;
  }
  report.checks.push_back(inequality("d", "vertex bound from matching", t.vertex_count(),
                                     7LL * cert.size_m() + 4LL * cert.size_w() + 3LL * g + 3LL * b - 6));
  report.checks.push_back(skipped("e", "vertex bound in g and b", catalog_note));
  report.checks.push_back(skipped("f", "closed surface vertex bound", catalog_note));
  report.checks.push_back(skipped("g", "at most nine pairwise disjoint homotopic 3-cycles", catalog_note));
  return report;
}

int max_matching_exact(const Triangulation& t) {
  if (t.vertex_count() > 60) throw Error(ErrorCode::too_large, "exact matching is limited to 60 vertices");
  const int n = t.vertex_count();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  MatchingSearch search(adjacency(t));
  return search.run(all, greedy_matching(t));
}

int components_without(const Triangulation& t, const std::vector<Vertex>& removed) {
  const int n = t.vertex_count();
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) gone[v] = 1;
  std::vector<char> seen(n, 0);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (gone[s] || seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : t.neighbors(x)) {
        if (gone[y] || seen[y]) continue;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return count;
}

bool is_four_connected(const Triangulation& t) {
  const int n = t.vertex_count();
  if (n <= 4) return false;
  std::vector<Vertex> removed;
  for (int a = 0; a < n; ++a) {
    removed = {a};
    if (components_without(t, removed) > 1) return false;
    for (int b = a + 1; b < n; ++b) {
      removed = {a, b};
      if (components_without(t, removed) > 1) return false;
      for (int c = b + 1; c < n; ++c) {
        removed = {a, b, c};
        if (components_without(t, removed) > 1) return false;
      }
    }
  }
  return true;
}

bool FourConnectivityReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
}

FourConnectivityReport check_4connectivity_bounds(const Triangulation& t, int sample_count, std::uint64_t seed) {
  require_valid(t);
  const auto cls = classify_surface(t);
  if (cls.boundary_count != 0 || cls.euler_genus < 1) {
    throw Error(ErrorCode::out_of_hypothesis, "needs a closed surface other than the sphere");
  }
  const int n = t.vertex_count();
  if (n > 60) throw Error(ErrorCode::too_large, "4-connectivity checks are limited to 60 vertices");
  const int g = cls.euler_genus;

  FourConnectivityReport out;
  out.four_connected = is_four_connected(t);
  if (!out.four_connected) {
    for (const char* id : {"vertices-vs-matching", "components", "tutte-berge"}) {
      out.checks.push_back(skipped(id, id, "not 4-connected"));
    }
    return out;
  }
  const int mm = max_matching_exact(t);
  out.checks.push_back(inequality("vertices-vs-matching", "vertices at most 2|M| + max{1, g-2}", n,
                                  2LL * mm + std::max(1, g - 2)));

  CheckRecord comp;
  comp.id = "components";
  comp.title = "components of G-U at most max{1, |U|+g-2}";
  CheckRecord tb;
  tb.id = "tutte-berge";
  tb.title = "odd components of G-U minus |U| at most deficiency";
  std::mt19937_64 rng(seed);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  const int max_size = std::min(6, n - 1);
  std::int64_t worst_comp = 1 << 30;
  std::int64_t worst_tb = 1 << 30;
  const int deficiency = n - 2 * mm;
  for (int s = 0; s < sample_count; ++s) {
    const int k = std::uniform_int_distribution<int>(1, max_size)(rng);
    std::vector<Vertex> u;
    std::sample(all.begin(), all.end(), std::back_inserter(u), k, rng);
    const int bound = std::max(1, k + g - 2);

    std::vector<char> gone(n, 0);
    for (Vertex v : u) gone[v] = 1;
    std::vector<int> comp_of(n, -1);
    std::vector<int> sizes;
    for (Vertex st = 0; st < n; ++st) {
      if (gone[st] || comp_of[st] >= 0) continue;
      const int id = static_cast<int>(sizes.size());
      sizes.push_back(0);
      std::vector<Vertex> stack{st};
      comp_of[st] = id;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        ++sizes[id];
        for (Vertex y : t.neighbors(x)) {
          if (gone[y] || comp_of[y] >= 0) continue;
          comp_of[y] = id;
          stack.push_back(y);
        }
      }
    }
    const int components = static_cast<int>(sizes.size());
    const int odd = static_cast<int>(std::count_if(sizes.begin(), sizes.end(), [](int z) { return z % 2 == 1; }));
    if (bound - components < worst_comp) {
      worst_comp = bound - components;
      comp.lhs = components;
      comp.rhs = bound;
    }
    if (deficiency - (odd - k) < worst_tb) {
      worst_tb = deficiency - (odd - k);
      tb.lhs = odd - k;
      tb.rhs = deficiency;
    }
    if (components > bound) {
      std::string w;
      for (Vertex v : u) w += (w.empty() ? "" : " ") + std::to_string(v);
      comp.witnesses.push_back(w);
    }
  }
  for (auto* r : {&comp, &tb}) {
    if (sample_count <= 0) {
      r->status = CheckStatus::skipped;
      r->note = "no samples";
      continue;
    }
    r->slack = *r->rhs - *r->lhs;
    r->status = *r->slack >= 0 ? CheckStatus::pass : CheckStatus::fail;
    r->note = std::to_string(sample_count) + " samples, seed " + std::to_string(seed);
  }
  out.checks.push_back(std::move(comp));
  out.checks.push_back(std::move(tb));
  return out;
}

}  // namespace irrtri
