#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "irrtri/contraction.hpp"
#include "irrtri/triangulation.hpp"

namespace testing {

irrtri::Triangulation tetrahedron();
irrtri::Triangulation single_triangle();

// Isomorphism by trying every vertex permutation; small inputs only.
bool brute_isomorphic(const irrtri::Triangulation& a, const irrtri::Triangulation& b);

irrtri::Triangulation shuffled(const irrtri::Triangulation& t, std::uint64_t seed);

struct Instance {
  std::string name;
  irrtri::Triangulation input;
  irrtri::Reduction reduction;
};

// Seeded random triangulations of torus, Klein bottle, genus-2 orientable
// surface, projective plane, Moebius band, annulus and pair of pants, each
// reduced to an irreducible triangulation with the random policy.
std::vector<Instance> reduced_corpus(int per_surface);

struct Figure1Case {
  int g;
  int b;
};

// g in {0,2,4,6}, b in {1,2,3}, (g,b) != (0,1).
std::vector<Figure1Case> figure1_cases();

}  // namespace testing
