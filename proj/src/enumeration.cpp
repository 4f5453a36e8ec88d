#include "irrtri/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "irrtri/contraction.hpp"

namespace irrtri {

SurfaceClass named_surface(const std::string& name) {
  if (name == "sphere") return SurfaceClass::from(true, 0, 0);
  if (name == "disk") return SurfaceClass::from(true, 0, 1);
  if (name == "projective") return SurfaceClass::from(false, 1, 0);
  if (name == "torus") return SurfaceClass::from(true, 2, 0);
  if (name == "klein") return SurfaceClass::from(false, 2, 0);
  if (name == "annulus") return SurfaceClass::from(true, 0, 2);
  if (name == "mobius") return SurfaceClass::from(false, 1, 1);
  if (name == "pants") return SurfaceClass::from(true, 0, 3);
  throw Error(ErrorCode::unknown_name, "unknown surface '" + name + "'");
}

namespace {

// Partial complex grown triangle by triangle. Vertex links are kept as
// unions of paths; a link that closes into a cycle, or a single path whose two
// end edges are frozen as boundary edges, marks its vertex complete.
class SearchState {
 public:
  SearchState(int max_vertices, bool track_orientation)
      : n_max_(max_vertices),
        track_orientation_(track_orientation),
        link_nb_(n_max_ * n_max_ * 2, -1),
        frozen_(n_max_ * n_max_, 0),
        directed_(n_max_ * n_max_, 0),
        link_vertices_(n_max_, 0),
        link_edges_(n_max_, 0),
        frozen_count_(n_max_, 0) {
    used_ = 3;
    add_triangle_unchecked(0, 1, 2);
  }

  int used() const { return used_; }
  int max_vertices() const { return n_max_; }
  int triangle_count() const { return static_cast<int>(tris_.size()); }
  const std::vector<Triangle>& triangles() const { return tris_; }

  int link_degree(Vertex x, Vertex p) const {
    return (nb(x, p, 0) >= 0 ? 1 : 0) + (nb(x, p, 1) >= 0 ? 1 : 0);
  }
  bool frozen(Vertex x, Vertex y) const { return frozen_[x * n_max_ + y] != 0; }

  enum class Status { open, complete, dead };

  Status status(Vertex x) const {
    const int lv = link_vertices_[x], le = link_edges_[x];
    if (lv > 0 && le == lv) return Status::complete;
    const int components = lv - le;
    if (components == 1 && frozen_count_[x] == 2) return Status::complete;
    if (frozen_count_[x] == 2 && components > 1) {
      for (Vertex p = 0; p < used_; ++p) {
        if (p != x && frozen(x, p)) return frozen(x, path_end(x, p)) ? Status::dead : Status::open;
      }
    }
    return Status::open;
  }

  // Smallest link endpoint of x whose edge is not frozen, or -1.
  Vertex open_endpoint(Vertex x) const {
    for (Vertex p = 0; p < used_; ++p) {
      if (p != x && link_degree(x, p) == 1 && !frozen(x, p)) return p;
    }
    return -1;
  }

  // Adds triangle {v, a, w} on the open edge va; w == used() introduces a new vertex.
  bool try_add(Vertex v, Vertex a, Vertex w) {
    if (w == used_) {
      if (used_ >= n_max_) return false;
    }
    const Vertex tri[3] = {v, a, w};
    for (int k = 0; k < 3; ++k) {
      const Vertex x = tri[k], y = tri[(k + 1) % 3];
      if (w < used_ || (x != w && y != w)) {
        if (frozen(x, y) || link_degree(x, y) >= 2) return false;
      }
    }
    if (w < used_) {
      if (status(w) != Status::open) return false;
      // Duplicate triangle: v,a already adjacent in w's link.
      if (nb(w, v, 0) == a || nb(w, v, 1) == a) return false;
    }
    for (int k = 0; k < 3; ++k) {
      const Vertex x = tri[k], p = tri[(k + 1) % 3], q = tri[(k + 2) % 3];
      if (x == w && w == used_) continue;
      if (!link_accepts(x, p, q)) return false;
    }
    if (track_orientation_) {
      // Existing triangle on v,a uses one direction; the new one takes the other.
      const bool forward_used = directed_[v * n_max_ + a] != 0;
      const Vertex x0 = forward_used ? a : v, x1 = forward_used ? v : a;
      // New oriented triangle (x0, x1, w).
      if (directed_[x1 * n_max_ + w] || directed_[w * n_max_ + x0]) return false;
      oriented_.push_back({x0, x1, w});
    }
    if (w == used_) ++used_;
    add_triangle_unchecked(v, a, w);
    return true;
  }

  void undo_add() {
    const Triangle tri = tris_.back();
    tris_.pop_back();
    for (int k = 0; k < 3; ++k) link_remove(tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]);
    if (track_orientation_) {
      const Triangle o = oriented_.back();
      oriented_.pop_back();
      for (int k = 0; k < 3; ++k) directed_[o[k] * n_max_ + o[(k + 1) % 3]] = 0;
    }
    const Vertex top = used_ - 1;
    if (top >= 3 && link_vertices_[top] == 0) --used_;
  }

  bool try_freeze(Vertex v, Vertex a) {
    if (frozen_count_[v] >= 2 || frozen_count_[a] >= 2) return false;
    set_frozen(v, a, 1);
    if (status(v) == Status::dead || status(a) == Status::dead) {
      set_frozen(v, a, 0);
      return false;
    }
    return true;
  }

  void undo_freeze(Vertex v, Vertex a) { set_frozen(v, a, 0); }

 private:
  Vertex nb(Vertex x, Vertex p, int slot) const { return link_nb_[(x * n_max_ + p) * 2 + slot]; }
  Vertex& nb(Vertex x, Vertex p, int slot) { return link_nb_[(x * n_max_ + p) * 2 + slot]; }

  Vertex path_end(Vertex x, Vertex p) const {
    Vertex prev = -1, cur = p;
    while (true) {
      Vertex next = nb(x, cur, 0) != prev ? nb(x, cur, 0) : nb(x, cur, 1);
      if (next < 0 || next == prev) return cur;
      prev = cur;
      cur = next;
    }
  }

  bool link_accepts(Vertex x, Vertex p, Vertex q) const {
    const int dp = link_degree(x, p), dq = link_degree(x, q);
    if (dp >= 2 || dq >= 2) return false;
    if (dp == 1 && dq == 1 && path_end(x, p) == q) {
      // Closing the link into a cycle: only if it is the whole link and unfrozen.
      return link_vertices_[x] - link_edges_[x] == 1 && frozen_count_[x] == 0;
    }
    return true;
  }

  void link_insert(Vertex x, Vertex p, Vertex q) {
    for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
      if (link_degree(x, a) == 0) ++link_vertices_[x];
      if (nb(x, a, 0) < 0) nb(x, a, 0) = b;
      else nb(x, a, 1) = b;
    }
    ++link_edges_[x];
  }

  void link_remove(Vertex x, Vertex p, Vertex q) {
    for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
      if (nb(x, a, 1) == b) nb(x, a, 1) = -1;
      else {
        nb(x, a, 0) = nb(x, a, 1);
        nb(x, a, 1) = -1;
      }
      if (link_degree(x, a) == 0) --link_vertices_[x];
    }
    --link_edges_[x];
  }

  void add_triangle_unchecked(Vertex a, Vertex b, Vertex c) {
    tris_.push_back({a, b, c});
    link_insert(a, b, c);
    link_insert(b, a, c);
    link_insert(c, a, b);
    if (track_orientation_) {
      if (oriented_.empty()) oriented_.push_back({a, b, c});
      const Triangle& o = oriented_.back();
      for (int k = 0; k < 3; ++k) directed_[o[k] * n_max_ + o[(k + 1) % 3]] = 1;
    }
  }

  void set_frozen(Vertex v, Vertex a, char value) {
    frozen_[v * n_max_ + a] = value;
    frozen_[a * n_max_ + v] = value;
    const int delta = value ? 1 : -1;
    frozen_count_[v] += delta;
    frozen_count_[a] += delta;
  }

  int n_max_;
  bool track_orientation_;
  int used_ = 0;
  std::vector<Triangle> tris_;
  std::vector<Triangle> oriented_;
  std::vector<Vertex> link_nb_;
  std::vector<char> frozen_;
  std::vector<char> directed_;
  std::vector<int> link_vertices_;
  std::vector<int> link_edges_;
  std::vector<int> frozen_count_;
};

class Enumerator {
 public:
  explicit Enumerator(const EnumSpec& spec) : spec_(spec) {
    max_triangles_ = 2 * (spec.max_vertices - spec.target.euler_characteristic);
    if (spec.time_budget.count() > 0) deadline_ = std::chrono::steady_clock::now() + spec.time_budget;
  }

  // Expands the tree breadth-first-ish until at least `want` subtrees exist.
  std::vector<SearchState> frontier(SearchState root, size_t want) {
    std::vector<SearchState> level{std::move(root)};
    for (int depth = 0; depth < 6 && level.size() < want; ++depth) {
      std::vector<SearchState> next;
      for (auto& s : level) {
        if (!expand(s, [&](SearchState& child) { next.push_back(child); })) leaf(s);
      }
      level = std::move(next);
    }
    return level;
  }

  void run(SearchState& s) {
    if (aborted_.load(std::memory_order_relaxed)) return;
    if (spec_.time_budget.count() > 0 && ((ticks_.fetch_add(1, std::memory_order_relaxed) + 1) & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
      aborted_ = true;
      return;
    }
    if (!expand(s, [&](SearchState& child) { run(child); })) leaf(s);
  }

  bool aborted() const { return aborted_.load(); }

  std::vector<CatalogEntry> results() {
    std::vector<CatalogEntry> out(accepted_.begin(), accepted_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  // Calls visit(child) for every child state; returns false if s has no
  // incomplete vertex (s is a leaf). Dead states have no children.
  template <typename Visit>
  bool expand(SearchState& s, Visit&& visit) {
    Vertex v = -1;
    for (Vertex x = 0; x < s.used(); ++x) {
      auto st = s.status(x);
      if (st == SearchState::Status::dead) return true;
      if (st == SearchState::Status::open) {
        v = x;
        break;
      }
    }
    if (v < 0) return false;
    const Vertex a = s.open_endpoint(v);
    if (a < 0) return true;

    if (s.triangle_count() < max_triangles_) {
      const int limit = std::min(s.used() + 1, s.max_vertices());
      for (Vertex w = 0; w < limit; ++w) {
        if (w == v || w == a) continue;
        if (!s.try_add(v, a, w)) continue;
        visit(s);
        s.undo_add();
      }
    }
    if (spec_.target.boundary_count > 0 && s.try_freeze(v, a)) {
      visit(s);
      s.undo_freeze(v, a);
    }
    return true;
  }

  void leaf(const SearchState& s) {
    auto t = Triangulation::build(s.used(), s.triangles());
    if (!validate(t).valid() || classify_surface(t) != spec_.target) return;
    auto form = canonical_form(t);
    {
      std::lock_guard lock(mutex_);
      if (!seen_.insert(form).second) return;
    }
    if (spec_.irreducible_only && !is_irreducible(t)) return;
    std::lock_guard lock(mutex_);
    accepted_.insert({form, t.vertex_count()});
  }

  const EnumSpec& spec_;
  int max_triangles_ = 0;
  std::chrono::steady_clock::time_point deadline_{};
  std::atomic<bool> aborted_{false};
  std::atomic<unsigned> ticks_{0};
  std::mutex mutex_;
  std::set<std::string> seen_;
  std::set<CatalogEntry> accepted_;
};

}  // namespace

Catalog enumerate(const EnumSpec& spec, int jobs) {
  const auto& s = spec.target;
  if (spec.max_vertices < 3) throw Error(ErrorCode::invalid_params, "max_vertices must be at least 3");
  if (spec.max_vertices > 64) throw Error(ErrorCode::too_large, "max_vertices above 64 is not supported");
  if (s.euler_genus < 0 || s.boundary_count < 0 || (s.orientable && s.euler_genus % 2 != 0) ||
      (!s.orientable && s.euler_genus < 1) || s.euler_characteristic != 2 - s.euler_genus - s.boundary_count) {
    throw Error(ErrorCode::invalid_params, "inconsistent target surface class");
  }
  Enumerator e(spec);
  SearchState root(spec.max_vertices, s.orientable);
  if (jobs <= 1) {
    e.run(root);
  } else {
    auto work = e.frontier(std::move(root), static_cast<size_t>(jobs) * 8);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&]() {
        for (size_t i = next++; i < work.size(); i = next++) e.run(work[i]);
      });
    }
    for (auto& th : pool) th.join();
  }
  Catalog catalog;
  catalog.entries = e.results();
  catalog.complete = !e.aborted();
  return catalog;
}

}  // namespace irrtri
