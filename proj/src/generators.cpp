#include "irrtri/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "irrtri/surface.hpp"

namespace irrtri {

SurfaceName parse_surface_name(std::string_view name) {
  if (name == "sphere_min") return SurfaceName::sphere_min;
  if (name == "disk_min") return SurfaceName::disk_min;
  if (name == "projective_min") return SurfaceName::projective_min;
  if (name == "torus_k7") return SurfaceName::torus_k7;
  throw Error(ErrorCode::unknown_name, "unknown surface name '" + std::string(name) + "'");
}

Triangulation canonical_surface(SurfaceName name) {
  switch (name) {
    case SurfaceName::sphere_min:
      return Triangulation::build(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    case SurfaceName::disk_min:
      return Triangulation::build(3, {{0, 1, 2}});
    case SurfaceName::projective_min:
      // Hemi-icosahedron: the 6-vertex projective plane, 1-skeleton K6.
      return Triangulation::build(6, {{0, 1, 2},
                                      {0, 1, 4},
                                      {0, 2, 3},
                                      {0, 3, 5},
                                      {0, 4, 5},
                                      {1, 2, 5},
                                      {1, 3, 4},
                                      {1, 3, 5},
                                      {2, 3, 4},
                                      {2, 4, 5}});
    case SurfaceName::torus_k7: {
      // Moebius-Kantor style embedding of K7: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
      std::vector<Triangle> tris;
      for (int i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
      }
      return Triangulation::build(7, std::move(tris));
    }
  }
  throw Error(ErrorCode::unknown_name, "unknown surface name");
}

Triangulation octahedron() {
  // Opposite pairs (0,1), (2,3), (4,5).
  std::vector<Triangle> tris;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) tris.push_back({a, b, c});
  return Triangulation::build(6, std::move(tris));
}

Triangulation icosahedron() {
  std::vector<Triangle> tris;
  auto up = [](int i) { return 1 + (i % 5); };
  auto low = [](int i) { return 6 + (i % 5); };
  for (int i = 0; i < 5; ++i) {
    tris.push_back({0, up(i), up(i + 1)});
    tris.push_back({up(i), up(i + 1), low(i)});
    tris.push_back({up(i + 1), low(i), low(i + 1)});
    tris.push_back({11, low(i), low(i + 1)});
  }
  return Triangulation::build(12, std::move(tris));
}

namespace {

template <typename VertexAt>
Triangulation grid(int rows, int cols, VertexAt at) {
  if (rows < 3 || cols < 3) throw Error(ErrorCode::invalid_params, "grid needs at least 3 rows and 3 columns");
  std::vector<Triangle> tris;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const Vertex a = at(i, j), b = at(i, j + 1), c = at(i + 1, j + 1), d = at(i + 1, j);
      tris.push_back({a, b, c});
      tris.push_back({a, c, d});
    }
  }
  return Triangulation::build(rows * cols, std::move(tris));
}

}  // namespace

Triangulation grid_torus(int rows, int cols) {
  return grid(rows, cols, [=](int i, int j) { return (i % rows) * cols + (j % cols); });
}

Triangulation grid_klein_bottle(int rows, int cols) {
  return grid(rows, cols, [=](int i, int j) {
    if (i == rows) return ((cols - j % cols) % cols);
    return i * cols + (j % cols);
  });
}

Triangulation connected_sum(const Triangulation& a, const Triangulation& b) {
  auto interior_triangle = [](const Triangulation& t) {
    for (int i = 0; i < t.triangle_count(); ++i) {
      const Triangle& tri = t.triangle(i);
      if (!t.is_boundary_vertex(tri[0]) && !t.is_boundary_vertex(tri[1]) && !t.is_boundary_vertex(tri[2])) return i;
    }
    throw Error(ErrorCode::invalid_params, "connected sum needs a triangle away from the boundary");
  };
  const int ia = interior_triangle(a), ib = interior_triangle(b);
  const Triangle ta = a.triangle(ia), tb = b.triangle(ib);

  std::vector<Vertex> map_b(b.vertex_count(), -1);
  for (int k = 0; k < 3; ++k) map_b[tb[k]] = ta[k];
  Vertex next = a.vertex_count();
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    if (map_b[v] < 0) map_b[v] = next++;
  }
  std::vector<Triangle> tris;
  for (int i = 0; i < a.triangle_count(); ++i) {
    if (i != ia) tris.push_back(a.triangle(i));
  }
  for (int i = 0; i < b.triangle_count(); ++i) {
    if (i == ib) continue;
    const Triangle& tri = b.triangle(i);
    tris.push_back({map_b[tri[0]], map_b[tri[1]], map_b[tri[2]]});
  }
  return Triangulation::build(next, std::move(tris));
}

Triangulation punch_holes(const Triangulation& t, int holes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(t.triangle_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<char> used(t.vertex_count(), 0);
  std::vector<char> removed(t.triangle_count(), 0);
  int count = 0;
  for (int i : order) {
    if (count == holes) break;
    const Triangle& tri = t.triangle(i);
    bool ok = true;
    for (Vertex x : tri) ok = ok && !used[x] && !t.is_boundary_vertex(x);
    if (!ok) continue;
    for (Vertex x : tri) used[x] = 1;
    removed[i] = 1;
    ++count;
  }
  if (count < holes) throw Error(ErrorCode::invalid_params, "not enough vertex-disjoint interior triangles");
  std::vector<Triangle> tris;
  for (int i = 0; i < t.triangle_count(); ++i) {
    if (!removed[i]) tris.push_back(t.triangle(i));
  }
  auto out = Triangulation::build(t.vertex_count(), std::move(tris));
  require_valid(out);
  return out;
}

Triangulation figure1(const Figure1Params& params) {
  const int g = params.g, b = params.b;
  if (g < 0 || g % 2 != 0 || b < 1 || (g == 0 && b == 1)) {
    throw Error(ErrorCode::invalid_params, "figure1 needs even g >= 0, b >= 1 and (g, b) != (0, 1)");
  }
  const int handles = g / 2;
  const int rim_edges = 5 * handles + 4 * (b - 1);
  const Vertex hub = 0;
  auto rim = [](int i) { return static_cast<Vertex>(i + 1); };

  std::vector<Triangle> tris;
  for (int i = 0; i < rim_edges; ++i) tris.push_back({hub, rim(i), rim(i + 1)});

  std::mt19937_64 rng(params.diagonal_seed);
  auto coin = [&]() { return (rng() & 1u) != 0; };
  // Quad p_a p_{a+1} p_c p_{c+1} glued untwisted; diagonal p_a p_c or p_{a+1} p_{c+1}.
  auto strip = [&](int a, int c, bool first_diagonal) {
    if (first_diagonal) {
      tris.push_back({rim(a), rim(a + 1), rim(c)});
      tris.push_back({rim(a), rim(c), rim(c + 1)});
    } else {
      tris.push_back({rim(a), rim(a + 1), rim(c + 1)});
      tris.push_back({rim(a + 1), rim(c), rim(c + 1)});
    }
  };

  int offset = 0;
  for (int h = 0; h < handles; ++h, offset += 5) {
    // Strips (o, o+3) and (o+1, o+4); both "second" diagonals would be the same edge p_{o+1} p_{o+4}.
    const int choice = static_cast<int>(rng() % 3);
    strip(offset, offset + 3, choice != 1);
    strip(offset + 1, offset + 4, choice == 0);
  }
  for (int k = 1; k < b; ++k, offset += 4) strip(offset, offset + 3, coin());

  return Triangulation::build(rim_edges + 2, std::move(tris));
}

Triangulation refine(const Triangulation& t, int steps, std::uint64_t seed) {
  require_valid(t);
  std::mt19937_64 rng(seed);
  std::vector<Triangle> tris(t.triangles().begin(), t.triangles().end());
  int n = t.vertex_count();
  Triangulation cur = t;

  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<size_t> pick_tri(0, tris.size() - 1);
    const size_t i = pick_tri(rng);
    const Triangle tri = tris[i];
    const Vertex x = n++;
    tris[i] = {tri[0], tri[1], x};
    tris.push_back({tri[1], tri[2], x});
    tris.push_back({tri[0], tri[2], x});
    cur = Triangulation::build(n, tris);

    for (int attempt = 0; attempt < 3; ++attempt) {
      auto edges = cur.edges();
      std::uniform_int_distribution<size_t> pick_edge(0, edges.size() - 1);
      const Edge e = edges[pick_edge(rng)];
      auto inc = cur.edge_triangles(e);
      if (inc.size() != 2) continue;
      const Triangle& t1 = cur.triangle(inc[0]);
      const Triangle& t2 = cur.triangle(inc[1]);
      const Vertex p = t1[0] + t1[1] + t1[2] - e.u - e.v;
      const Vertex q = t2[0] + t2[1] + t2[2] - e.u - e.v;
      if (cur.has_edge(p, q)) continue;
      std::vector<Triangle> flipped;
      flipped.reserve(tris.size());
      for (int k = 0; k < cur.triangle_count(); ++k) {
        if (k != inc[0] && k != inc[1]) flipped.push_back(cur.triangle(k));
      }
      flipped.push_back({p, q, e.u});
      flipped.push_back({p, q, e.v});
      auto candidate = Triangulation::build(n, flipped);
      if (!validate(candidate).valid()) continue;
      cur = std::move(candidate);
      tris = std::move(flipped);
    }
    tris.assign(cur.triangles().begin(), cur.triangles().end());
  }
  return cur;
}

}  // namespace irrtri
