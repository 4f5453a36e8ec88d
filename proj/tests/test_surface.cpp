#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "irrtri/generators.hpp"
#include "irrtri/surface.hpp"
#include "support.hpp"

using namespace irrtri;

namespace {

SurfaceClass cls(bool o, int g, int b) { return SurfaceClass::from(o, g, b); }

int total_chi(const CutResult& cut) {
  int chi = 0;
  for (const auto& c : cut.components) chi += c.euler_characteristic();
  return chi;
}

std::vector<Cycle> interior_3cycles(const Triangulation& t) {
  std::vector<Cycle> out;
  for (const auto& c : enumerate_3cycles(t)) {
    bool inside = true;
    for (Vertex v : c.vertices) inside = inside && !t.is_boundary_vertex(v);
    if (inside) out.push_back(c.cycle());
  }
  return out;
}

// Grid column j of a rows x cols grid torus.
Cycle column(int rows, int cols, int j) {
  Cycle c;
  for (int i = 0; i < rows; ++i) c.vertices.push_back(i * cols + j);
  return c;
}

}  // namespace

TEST_CASE("classification of the standard examples") {
  CHECK(classify_surface(testing::tetrahedron()) == cls(true, 0, 0));
  CHECK(classify_surface(testing::single_triangle()) == cls(true, 0, 1));
  CHECK(classify_surface(octahedron()) == cls(true, 0, 0));
  CHECK(classify_surface(icosahedron()) == cls(true, 0, 0));
  CHECK(classify_surface(canonical_surface(SurfaceName::torus_k7)) == cls(true, 2, 0));
  CHECK(classify_surface(grid_torus(3, 5)) == cls(true, 2, 0));
  CHECK(classify_surface(grid_klein_bottle(3, 3)) == cls(false, 2, 0));
  CHECK(classify_surface(grid_klein_bottle(4, 5)) == cls(false, 2, 0));

  auto t = testing::tetrahedron();
  CHECK(t.euler_characteristic() == 2);
  CHECK(classify_surface(t).to_string() == "orientable 0 0 2");
  CHECK(classify_surface(grid_klein_bottle(3, 3)).to_string() == "nonorientable 2 0 0");
}

TEST_CASE("6-vertex projective plane") {
  auto rp2 = canonical_surface(SurfaceName::projective_min);
  CHECK(rp2.vertex_count() == 6);
  CHECK(rp2.triangle_count() == 10);
  CHECK(rp2.edge_count() == 15);  // complete graph
  CHECK(6 - 15 + 10 == 1);
  CHECK(classify_surface(rp2) == cls(false, 1, 0));
  CHECK_FALSE(coherent_orientation(rp2).has_value());
}

TEST_CASE("surface class invariants hold everywhere") {
  std::vector<Triangulation> corpus = {canonical_surface(SurfaceName::torus_k7), grid_klein_bottle(3, 4),
                                       figure1({6, 3, 0}), punch_holes(refine(octahedron(), 10, 2), 2, 2),
                                       connected_sum(grid_klein_bottle(3, 3), canonical_surface(SurfaceName::projective_min))};
  for (const auto& t : corpus) {
    auto c = classify_surface(t);
    CHECK(c.euler_characteristic == 2 - c.euler_genus - c.boundary_count);
    CHECK(c.euler_characteristic == t.euler_characteristic());
    if (c.orientable) CHECK(c.euler_genus % 2 == 0);
    if (!c.orientable) CHECK(c.euler_genus >= 1);
    for (std::uint64_t s = 0; s < 3; ++s) CHECK(classify_surface(testing::shuffled(t, s)) == c);
  }
  CHECK(classify_surface(corpus.back()) == cls(false, 3, 0));
}

TEST_CASE("coherent orientation uses each interior edge in both directions") {
  for (const auto& t : {canonical_surface(SurfaceName::torus_k7), figure1({4, 2, 1}), icosahedron()}) {
    auto oriented = coherent_orientation(t);
    REQUIRE(oriented.has_value());
    std::map<std::pair<Vertex, Vertex>, int> directed;
    for (const auto& tri : *oriented) {
      for (int k = 0; k < 3; ++k) ++directed[{tri[k], tri[(k + 1) % 3]}];
    }
    for (const auto& [e, count] : directed) {
      CHECK(count == 1);
      if (!t.is_boundary_edge({e.first, e.second})) CHECK(directed.count({e.second, e.first}) == 1);
    }
  }
}

TEST_CASE("boundary walks") {
  auto annulus = figure1({0, 2, 0});
  auto walks = boundary_walks(annulus);
  CHECK(walks.size() == 2);
  size_t total = 0;
  for (const auto& w : walks) {
    total += w.size();
    CHECK(w.front() == *std::min_element(w.begin(), w.end()));
    CHECK(w[1] < w.back());
    for (size_t i = 0; i < w.size(); ++i) CHECK(annulus.is_boundary_edge({w[i], w[(i + 1) % w.size()]}));
  }
  CHECK(static_cast<int>(total) == annulus.vertex_count());
  CHECK(boundary_walks(testing::tetrahedron()).empty());
}

TEST_CASE("3-cycle census") {
  auto tet = enumerate_3cycles(testing::tetrahedron());
  CHECK(tet.size() == 4);
  for (const auto& c : tet) CHECK(c.facial);
  auto tri = enumerate_3cycles(testing::single_triangle());
  CHECK(tri.size() == 1);
  CHECK(tri[0].facial);

  // complete graph on 7 vertices: every triple is a 3-cycle; faces by Euler's formula
  auto k7 = canonical_surface(SurfaceName::torus_k7);
  CHECK(k7.edge_count() == 21);
  auto cycles = enumerate_3cycles(k7);
  int binom = 7 * 6 * 5 / 6;
  int faces = 2 * 7;  // F = 2V on the torus since 3F = 2E and V - E + F = 0
  CHECK(static_cast<int>(cycles.size()) == binom);
  CHECK(std::count_if(cycles.begin(), cycles.end(), [](const ThreeCycle& c) { return c.facial; }) == faces);
}

TEST_CASE("cut along a 3-cycle of the tetrahedron") {
  auto cut = cut_along_cycle(testing::tetrahedron(), {{0, 1, 2}});
  REQUIRE(cut.components.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(classify_surface(cut.components[i]) == cls(true, 0, 1));
    REQUIRE(cut.copies[i].size() == 1);
    CHECK(cut.copies[i][0].size() == 3);
  }
  CHECK(cut.copy_count(0) == 2);
  CHECK(total_chi(cut) == 2);
}

TEST_CASE("non-facial 3-cycle on the 7-vertex torus cuts to an annulus") {
  auto k7 = canonical_surface(SurfaceName::torus_k7);
  int seen = 0;
  for (const auto& c : enumerate_3cycles(k7)) {
    if (c.facial) continue;
    ++seen;
    auto cut = cut_along_cycle(k7, c.cycle());
    REQUIRE(cut.components.size() == 1);
    CHECK(classify_surface(cut.components[0]) == cls(true, 0, 2));
    CHECK(cycle_sidedness(k7, c.cycle()) == Sidedness::two_sided);
    CHECK_FALSE(is_null_homotopic(k7, c.cycle()));
  }
  CHECK(seen == 21);
}

TEST_CASE("non-facial 3-cycle on the projective plane is one-sided") {
  auto rp2 = canonical_surface(SurfaceName::projective_min);
  int one_sided = 0;
  for (const auto& c : enumerate_3cycles(rp2)) {
    if (c.facial) {
      CHECK(cycle_sidedness(rp2, c.cycle()) == Sidedness::two_sided);
      continue;
    }
    auto cut = cut_along_cycle(rp2, c.cycle());
    REQUIRE(cut.components.size() == 1);
    CHECK(classify_surface(cut.components[0]) == cls(true, 0, 1));
    CHECK(cut.copies[0].size() == 1);
    CHECK(cut.copies[0][0].size() == 6);
    CHECK(cycle_sidedness(rp2, c.cycle()) == Sidedness::one_sided);
    CHECK_FALSE(is_null_homotopic(rp2, c.cycle()));
    ++one_sided;
  }
  CHECK(one_sided == 10);
}

TEST_CASE("facial cycles are null-homotopic and two-sided") {
  std::vector<Triangulation> corpus = {grid_klein_bottle(3, 3), canonical_surface(SurfaceName::torus_k7),
                                       canonical_surface(SurfaceName::projective_min), refine(grid_torus(3, 3), 6, 1),
                                       figure1({2, 3, 1})};
  for (const auto& t : corpus) {
    for (const auto& c : enumerate_3cycles(t)) {
      bool inside = true;
      for (Vertex v : c.vertices) inside = inside && !t.is_boundary_vertex(v);
      if (!c.facial || !inside) continue;
      CHECK(cycle_sidedness(t, c.cycle()) == Sidedness::two_sided);
      CHECK(is_null_homotopic(t, c.cycle()));
    }
  }
}

TEST_CASE("cut properties over many cycles") {
  std::vector<Triangulation> corpus = {grid_klein_bottle(3, 4), canonical_surface(SurfaceName::torus_k7),
                                       refine(canonical_surface(SurfaceName::projective_min), 8, 4),
                                       connected_sum(grid_torus(3, 3), grid_torus(3, 3)), refine(testing::tetrahedron(), 12, 9)};
  for (const auto& t : corpus) {
    const bool orientable = classify_surface(t).orientable;
    for (const auto& c : interior_3cycles(t)) {
      auto cut = cut_along_cycle(t, c);
      CHECK(total_chi(cut) == t.euler_characteristic());
      for (const auto& comp : cut.components) CHECK(validate(comp).valid());
      const auto side = cycle_sidedness(t, c);
      CHECK(cut.copy_count(0) == (side == Sidedness::two_sided ? 2 : 1));
      if (orientable) CHECK(side == Sidedness::two_sided);
      if (is_null_homotopic(t, c)) CHECK(side == Sidedness::two_sided);
      for (size_t i = 0; i < cut.components.size(); ++i) {
        CHECK(cut.to_original[i].size() == static_cast<size_t>(cut.components[i].vertex_count()));
      }
    }
  }
}

TEST_CASE("parallel columns of a grid torus are homotopic") {
  auto t = grid_torus(3, 6);
  auto c0 = column(3, 6, 0);
  auto c2 = column(3, 6, 2);
  auto c3 = column(3, 6, 3);
  CHECK_FALSE(is_null_homotopic(t, c0));
  CHECK(disjoint_cycles_homotopic(t, c0, c2));
  CHECK(disjoint_cycles_homotopic(t, c2, c0));
  CHECK(disjoint_cycles_homotopic(t, c0, c3));
  const Cycle both[] = {c0, c3};
  auto cut = cut_along_cycles(t, both);
  CHECK(cut.components.size() == 2);
  for (const auto& comp : cut.components) CHECK(classify_surface(comp) == cls(true, 0, 2));
}

TEST_CASE("null versus essential cycles are not homotopic") {
  auto t = grid_torus(3, 6);
  Cycle facial;
  for (const auto& c : enumerate_3cycles(t)) {
    if (!c.facial) continue;
    bool avoids = true;
    for (Vertex v : c.vertices) avoids = avoids && v % 6 != 0 && v % 6 != 5;
    if (avoids) {
      facial = c.cycle();
      break;
    }
  }
  REQUIRE(facial.vertices.size() == 3);
  CHECK_FALSE(disjoint_cycles_homotopic(t, column(3, 6, 0), facial));
  CHECK_FALSE(disjoint_cycles_homotopic(t, facial, column(3, 6, 0)));

  auto big = refine(grid_torus(3, 3), 20, 3);
  std::vector<Cycle> faces;
  for (const auto& c : enumerate_3cycles(big)) {
    if (c.facial) faces.push_back(c.cycle());
  }
  for (size_t j = 1; j < faces.size(); ++j) {
    bool disjoint = true;
    for (Vertex v : faces[0].vertices) {
      disjoint = disjoint && std::find(faces[j].vertices.begin(), faces[j].vertices.end(), v) == faces[j].vertices.end();
    }
    if (disjoint) {
      CHECK(disjoint_cycles_homotopic(big, faces[0], faces[j]));
      break;
    }
  }
}

TEST_CASE("cycle preconditions") {
  auto t = grid_torus(3, 6);
  auto expect = [](auto&& fn, ErrorCode code) {
    try {
      fn();
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect([&] { cut_along_cycle(t, {{0, 6, 0}}); }, ErrorCode::non_simple_cycle);
  expect([&] { cut_along_cycle(t, {{0, 6}}); }, ErrorCode::non_simple_cycle);
  expect([&] { cut_along_cycle(t, {{0, 8, 14}}); }, ErrorCode::non_simple_cycle);
  expect([&] { disjoint_cycles_homotopic(t, column(3, 6, 0), {{0, 1, 7}}); }, ErrorCode::not_vertex_disjoint);
  auto disk = figure1({2, 1, 0});
  expect([&] { cut_along_cycle(disk, {{0, 1, 2}}); }, ErrorCode::cycle_touches_boundary);
}

TEST_CASE("capped homotopy sees boundary cycles") {
  auto annulus = figure1({0, 2, 0});
  CappedHomotopy capped(annulus);
  CHECK(capped.apexes().size() == 2);
  CHECK(classify_surface(capped.capped()) == cls(true, 0, 0));
  for (const auto& c : enumerate_3cycles(annulus)) {
    if (c.facial) CHECK(capped.null_homotopic(c.cycle()));
  }
  // the core curve of the annulus is essential
  int essential = 0;
  for (const auto& c : enumerate_3cycles(annulus)) {
    if (!c.facial && !capped.null_homotopic(c.cycle())) ++essential;
  }
  CHECK(essential > 0);
}
