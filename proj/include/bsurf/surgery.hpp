#pragma once

#include "bsurf/branch.hpp"
#include "bsurf/homology.hpp"
#include "bsurf/surfaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bsurf {

enum class GlueDirection { Aligned, Reversed };

const char* glue_direction_name(GlueDirection d);

/// Boundary j of the patch is glued to circles[j]. Aligned sends boundary
/// vertex i to circles[j][i], reversed sends it to circles[j][(L - i) % L].
struct AttachmentSpec {
  BranchedSurface host;
  std::vector<std::vector<Vertex>> circles;
  CompactSurfaceModel patch;
  std::vector<GlueDirection> directions; // empty means all aligned
};

struct AttachmentResult {
  BranchedSurface surface;
  /// Host and patch after the subdivisions needed to match loop lengths. The
  /// host keeps its vertex numbering inside the result.
  BranchedSurface host;
  CompactSurfaceModel patch;
  std::vector<std::vector<Vertex>> circles; // T_j in host (and result) numbering
  std::vector<Vertex> patch_to_result;      // patch vertex -> result vertex
  int host_subdivisions = 0;
  int patch_subdivisions = 0;
};

/// Glues the patch onto the host along the circles, subdividing the coarser
/// side up to three times to match lengths. Throws CirclesIntersectLocus,
/// NotDisjoint, NotACycle, LengthMismatch, InvalidParameters.
AttachmentResult attach_surface(const AttachmentSpec& spec);

/// Ordered boundary loop of a disk subcomplex given by its triangles, or empty
/// when the triangles do not form an embedded disk.
std::optional<std::vector<Vertex>> disk_boundary(const SimplicialComplex2& complex,
                                                 const std::vector<Triangle>& disk);

/// Spec of a bubble attachment: the circles are the disk boundaries and the
/// patch is a planar surface with matching boundary lengths. Throws
/// DisksOverlap, DiskTouchesLocus, InvalidParameters.
AttachmentSpec bubble_spec(const BranchedSurface& host, const std::vector<std::vector<Triangle>>& disks);
AttachmentResult bubble_attach(const BranchedSurface& host, const std::vector<std::vector<Triangle>>& disks);

/// Triangles of the closed star of each vertex, for vertices with cycle links.
std::vector<Triangle> vertex_star(const SimplicialComplex2& complex, Vertex v);

/// Ordered link cycle of a vertex with a cycle link.
std::vector<Vertex> link_cycle(const SimplicialComplex2& complex, Vertex v);

struct Thm1Prediction {
  Coeff coeff = Coeff::Integers;
  AbelianGroup h1;
  AbelianGroup h2;
  AbelianGroup ch1;
  std::optional<AbelianGroup> ch2; // only when h1 is free
};

/// Direct-sum prediction for the attached surface. `host_homology` and
/// `host_cohomology` must use the same coefficients; the patch is described
/// by its capped-off closed surface. Throws InvalidL for l < 1.
Thm1Prediction predict_thm1(const HomologySummary& host_homology, const HomologySummary& host_cohomology, int l,
                            bool patch_orientable, int patch_genus);

enum class Orientability { Orientable, NonOrientable };

const char* orientability_name(Orientability o);

struct HeegaardRecord {
  int l = 0;
  Orientability target = Orientability::Orientable;
  int genus_before = 0;
  int genus_after = 0;
};

struct HeegaardLedger {
  int genus_bound = 0;
  Orientability ambient = Orientability::Orientable;
  std::vector<HeegaardRecord> history;
};

/// genus_bound += l - 1. A non-orientable ambient stays non-orientable.
/// Throws InvalidL for l < 1 and InvalidParameters for an orientable target
/// from a non-orientable ambient.
HeegaardLedger apply_heegaard(HeegaardLedger ledger, int l, Orientability target);

} // namespace bsurf
