#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "curv/graph.hpp"

namespace curv {

// Standard families. cyclic needs n >= 3, wheel n >= 3 (rim cycle + hub
// adjacent to every rim vertex). tree_random grows a uniform-attachment tree:
// vertex v (v >= 1) picks a parent uniformly among 0..v-1 from a seeded
// mt19937_64, so output depends only on (n, seed).
Graph complete(int n);
Graph cyclic(int n);
Graph discrete(int n);
Graph wheel(int n);
Graph tree_random(int n, std::uint64_t seed);

// 1-skeletons of the five platonic solids. Throws Error(unknown_name) for an
// unrecognized name.
Graph platonic(std::string_view name);

// Vertices +/-e_1..+/-e_n, all non-antipodal pairs adjacent: the discrete
// (n-1)-sphere. Simplex counts are v_k = 2^{k+1} C(n, k+1).
Graph cross_polytope(int n);

// pyramid: one apex adjacent to every vertex. bipyramid: two mutually
// non-adjacent apexes, each adjacent to every vertex of g (sends chi to
// 2 - chi(g) and bipyramid(cross_polytope(n)) is cross_polytope(n+1)).
Graph pyramid(const Graph& g);
Graph bipyramid(const Graph& g);

// Boundary complex of the n-cube with the faces of the listed dimensions
// stellated (default 2..n-1). Vertex set: the 2^n cube vertices plus one
// center per stellated face; adjacency: strict containment in the cube face
// lattice, plus the original cube edges (1-faces stay direct edges).
// Vertex order: cube vertices in binary order, then face centers by ascending
// face dimension, lexicographic within a dimension.
Graph stellated_cube_boundary(int n);
Graph stellated_cube_boundary(int n, const std::vector<int>& stellate_dims);

// All coordinate vectors with one zero entry and +/-1 elsewhere (192 of them),
// adjacent at squared distance 2. Unit spheres are two disjoint K_5's, so this
// is the canonical validator rejection case.
Graph rectified_hexeract();

// The 120-vertex regular 4-polytope skeleton with icosahedral unit spheres.
// Coordinates live in Q(sqrt 5) and adjacency is decided exactly at the
// minimal nonzero squared distance; no floating point is involved.
Graph cell_600();

// Quotient identifying correspondence pairs (g-vertex, h-vertex); the
// remaining h vertices are appended after g's. Raw quotient: callers wanting
// the sphere-surgery Euler characteristic arithmetic must pass punctured
// graphs themselves. Throws Error(overlapping_correspondence) if either side
// repeats a vertex.
Graph glue(const Graph& g, const Graph& h, const std::vector<Edge>& correspondence);

// Same-graph identification: each pair (keep, drop) merges drop into keep.
// The keep and drop sides must be disjoint vertex sets. Identifications that
// would produce a self-loop are dropped (simple-graph quotient).
Graph self_glue(const Graph& g, const std::vector<Edge>& correspondence);

// Each unordered pair drawn independently with probability p: pairs scanned in
// lexicographic order, one draw per pair from mt19937_64(seed), included iff
// (next >> 11) * 2^-53 < p. Reproducible across platforms.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// g's vertices first, then h's.
Graph disjoint_union(const Graph& g, const Graph& h);

// Triangulated torus on a rows x cols grid: (i, j) adjacent to (i+1, j),
// (i, j+1) and (i+1, j+1), indices mod the grid. Needs rows, cols >= 4 so the
// unit spheres are chordless hexagons; a valid 2-graph with chi = 0.
Graph triangulated_torus(int rows, int cols);

}  // namespace curv
