#pragma once

#include "bsurf/complex.hpp"
#include "bsurf/homology.hpp"

#include <optional>
#include <vector>

namespace bsurf {

struct CompactSurfaceModel {
  bool orientable = true;
  int genus = 0; // handles when orientable, crosscaps otherwise
  int boundary_count = 0;
  SimplicialComplex2 triangulation;
  std::vector<std::vector<Vertex>> boundaries; // boundary j as an ordered vertex loop

  int expected_euler_characteristic() const;
};

constexpr int kDefaultBoundaryLength = 6;

/// Triangulated compact connected surface. Built from the boundary of a
/// tetrahedron by connected sums with a 7-vertex torus or a 6-vertex
/// projective plane, then each boundary component is cut out of a triangle
/// and collared out to a fresh loop of the requested length (default 6).
/// Throws InvalidParameters.
CompactSurfaceModel make_surface(bool orientable, int genus_or_crosscaps, int boundary_count,
                                 const std::vector<int>& boundary_lengths = {});

/// Cones every boundary loop; the apex of boundary i is vertex V + i.
CompactSurfaceModel close_up(const CompactSurfaceModel& surface);

/// H1 of the closed surface with the given parameters. Throws InvalidParameters.
AbelianGroup reference_h1_closed(bool orientable, int genus_or_crosscaps, Coeff coeff);

/// Minimal triangulations used as building blocks and test fixtures.
SimplicialComplex2 tetrahedron_boundary();
SimplicialComplex2 octahedron();
SimplicialComplex2 torus7();
SimplicialComplex2 projective_plane6();

/// Coherent orientation of a surface (with or without boundary): a triangle
/// chain with coefficients +-1 relative to the ascending vertex order whose
/// boundary is supported on edges lying in one triangle. Empty when some
/// component is non-orientable or the complex is not a surface.
std::optional<std::vector<Int>> fundamental_chain(const SimplicialComplex2& surface);

/// Edges lying in exactly one triangle, grouped into ordered loops (each
/// starting at its smallest vertex). Empty when those edges do not form
/// disjoint loops.
std::optional<std::vector<std::vector<Vertex>>> boundary_loops(const SimplicialComplex2& surface);

bool is_closed_surface(const SimplicialComplex2& complex);
bool is_surface_with_boundary(const SimplicialComplex2& complex);

} // namespace bsurf
