#pragma once

#include "bsurf/complex.hpp"
#include "bsurf/surfaces.hpp"

#include <set>
#include <vector>

namespace bsurf {

/// Layout of a sheet bundle over a circle: core circle c_0..c_{n-1} and, for
/// each leg L, an outer row a^L_0..a^L_{n-1}. Leg L at i spans the triangles
/// (c_i, c_{i+1}, a^L_i) and (c_{i+1}, a^L_i, a^L_{i+1}); at the seam i = n-1
/// the outer row continues into leg seam[L].
struct SheetBundle {
  SimplicialComplex2 complex;
  int n = 0;
  int legs = 0;
  std::vector<Vertex> core;                     // c_i = i
  std::vector<std::vector<Vertex>> outer;       // outer[L][i] = a^L_i
  std::vector<std::vector<Vertex>> free_circles; // outer loops after the seam identification
  std::vector<Vertex> apexes;                   // cone points when capped, one per free circle
};

/// Bundle of `legs` half-open strips over a circle of length n >= 3 with leg
/// permutation `seam` (identity when empty). legs = 3 is the tripod bundle;
/// identity seam gives K x S^1.
SheetBundle sheet_bundle(int n, int legs, std::vector<int> seam = {});

/// Same bundle with every free outer circle coned off.
SheetBundle capped_sheet_bundle(int n, int legs, std::vector<int> seam = {});

inline SheetBundle tripod_bundle(int n = 4) { return sheet_bundle(n, 3); }
inline SheetBundle leg_swap_bundle(int n = 4) { return sheet_bundle(n, 3, {0, 2, 1}); }
inline SheetBundle leg_cycle_bundle(int n = 4) { return sheet_bundle(n, 3, {1, 2, 0}); }

/// Greedy pick, in the given order, of up to `count` vertices with cycle links
/// whose closed stars are pairwise disjoint and avoid `avoid`.
std::vector<Vertex> separated_vertices(const SimplicialComplex2& complex, const std::vector<Vertex>& order, int count,
                                       const std::set<Vertex>& avoid = {});

/// Annulus made of `rings` concentric rings of n vertices; ring r vertex i is
/// r * n + i. Between rings r and r + 1 it has the triangles
/// (r:i, r:i+1, r+1:i) and (r:i+1, r+1:i, r+1:i+1).
SimplicialComplex2 ring_annulus(int n, int rings);

/// Projection of a three-leg sheet bundle to ring_annulus(n, rings): the core
/// goes to the middle ring, leg 0 one ring inside, the other legs one ring
/// outside. Requires rings >= 3 odd.
std::vector<Vertex> bundle_projection(const SheetBundle& bundle, int rings);

/// Cone on a loop of length n: boundary vertices 0..n-1, apex n.
CompactSurfaceModel cone_patch(int n);

/// Three triangles sharing the edge {0, 1}.
SimplicialComplex2 open_book();

} // namespace bsurf
