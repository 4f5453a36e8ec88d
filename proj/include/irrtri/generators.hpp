#pragma once

#include <cstdint>
#include <string_view>

#include "irrtri/triangulation.hpp"

namespace irrtri {

enum class SurfaceName { sphere_min, disk_min, projective_min, torus_k7 };

// Throws Error(unknown_name).
SurfaceName parse_surface_name(std::string_view name);

Triangulation canonical_surface(SurfaceName name);

Triangulation octahedron();
Triangulation icosahedron();

// rows x cols grid of squares, each split by a diagonal; rows, cols >= 3.
Triangulation grid_torus(int rows, int cols);
// Same grid with one pair of sides glued with a flip.
Triangulation grid_klein_bottle(int rows, int cols);

// Removes one triangle from each and identifies their boundaries.
Triangulation connected_sum(const Triangulation& a, const Triangulation& b);

// Removes `holes` pairwise vertex-disjoint interior triangles chosen by seed.
// Each removal adds one boundary component. Throws invalid_params if no such
// set of triangles is found.
Triangulation punch_holes(const Triangulation& t, int holes, std::uint64_t seed);

struct Figure1Params {
  int g = 0;  // even Euler genus
  int b = 1;  // boundary components, (g, b) != (0, 1)
  std::uint64_t diagonal_seed = 0;
};

// Orientable irreducible triangulation with Euler genus g, b boundaries,
// 5g/2 + 4b - 2 vertices, all on the boundary.
//
// Layout: an open fan of triangles around a hub vertex c, with rim path
// p0 p1 ... pm. Along the rim come g/2 handle blocks of five rim edges
// (strips p0p1<->p3p4 and p1p2<->p4p5, interlaced) followed by b-1 annulus
// blocks of four rim edges (one strip p0p1<->p3p4), indices relative to the
// block start. Every strip is a single untwisted quadrilateral glued between
// two rim edges and split by one diagonal; the seed picks the diagonals.
// Throws Error(invalid_params).
Triangulation figure1(const Figure1Params& params);

// Adds `steps` vertices by stellating random triangles, each followed by a
// few random validated edge flips. Surface class is preserved.
Triangulation refine(const Triangulation& t, int steps, std::uint64_t seed);

}  // namespace irrtri
