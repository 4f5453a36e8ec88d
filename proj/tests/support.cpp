#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "irrtri/generators.hpp"

namespace testing {

using namespace irrtri;

Triangulation tetrahedron() { return canonical_surface(SurfaceName::sphere_min); }
Triangulation single_triangle() { return canonical_surface(SurfaceName::disk_min); }

bool brute_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.vertex_count() != b.vertex_count() || a.triangle_count() != b.triangle_count()) return false;
  std::vector<Vertex> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  const auto target = b.triangles();
  std::vector<Triangle> mapped(a.triangle_count());
  do {
    for (int i = 0; i < a.triangle_count(); ++i) {
      const Triangle& tri = a.triangle(i);
      mapped[i] = sorted({perm[tri[0]], perm[tri[1]], perm[tri[2]]});
    }
    std::sort(mapped.begin(), mapped.end());
    if (std::equal(mapped.begin(), mapped.end(), target.begin(), target.end())) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Triangulation shuffled(const Triangulation& t, std::uint64_t seed) {
  std::vector<Vertex> perm(t.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(t, perm);
}

std::vector<Instance> reduced_corpus(int per_surface) {
  const auto torus = canonical_surface(SurfaceName::torus_k7);
  const auto sphere = canonical_surface(SurfaceName::sphere_min);
  const auto rp2 = canonical_surface(SurfaceName::projective_min);
  struct Source {
    std::string name;
    Triangulation base;
    int holes;
  };
  const std::vector<Source> sources = {
      {"torus", torus, 0},
      {"klein", grid_klein_bottle(3, 3), 0},
      {"genus2", connected_sum(torus, torus), 0},
      {"projective", rp2, 0},
      {"mobius", rp2, 1},
      {"annulus", sphere, 2},
      {"pants", sphere, 3},
  };
  std::vector<Instance> out;
  for (size_t k = 0; k < sources.size(); ++k) {
    const auto& src = sources[k];
    for (int i = 0; i < per_surface; ++i) {
      const std::uint64_t seed = 1000 * k + i;
      auto t = refine(src.base, 10 + (i * 7) % 41, seed);
      if (src.holes > 0) t = punch_holes(t, src.holes, seed);
      auto reduction = reduce_to_irreducible(t, ReductionPolicy::random(seed));
      out.push_back({src.name + "/" + std::to_string(i), std::move(t), std::move(reduction)});
    }
  }
  return out;
}

std::vector<Figure1Case> figure1_cases() {
  std::vector<Figure1Case> out;
  for (int g : {0, 2, 4, 6}) {
    for (int b : {1, 2, 3}) {
      if (g == 0 && b == 1) continue;
      out.push_back({g, b});
    }
  }
  return out;
}

}  // namespace testing
