#pragma once

#include "bsurf/branch.hpp"
#include "bsurf/surgery.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bsurf {

/// Simplicial map from a branched surface to a triangulated surface. Target
/// vertices with path links form the frame standing in for the ends of a
/// non-compact surface; the image has to avoid it.
struct TargetSurfaceMap {
  BranchedSurface source;
  SimplicialComplex2 target;
  std::vector<Vertex> assignment; // source vertex -> target vertex
  std::set<Vertex> frame;
};

/// Throws InvalidParameters (target not a surface, wrong assignment size,
/// image meeting the frame), IndexOutOfRange, DegenerateImageTriangle,
/// NotSimplicial.
TargetSurfaceMap build_target_map(const BranchedSurface& source, const SimplicialComplex2& target,
                                  std::vector<Vertex> assignment);

enum class VertexModelKind { Manifold, Collar, Tripod };
enum class LocalModelVerdict { BornFromSSNS, LocallyBornOnly, Fail };

const char* vertex_model_kind_name(VertexModelKind k);
const char* local_model_verdict_name(LocalModelVerdict v);

struct VertexModel {
  Vertex vertex = 0;
  VertexModelKind kind = VertexModelKind::Manifold;
  bool ok = true;
  int sheets_on_first_side = 0; // tripod vertices only; sides ordered by size
  int sheets_on_second_side = 0;
  std::string reason;
};

struct LocalModelReport {
  LocalModelVerdict verdict = LocalModelVerdict::BornFromSSNS;
  std::string reason; // first failure
  std::vector<VertexModel> vertices;

  int count(VertexModelKind kind) const;
  /// Every tripod vertex has one sheet on one side and two on the other.
  bool tripods_split_one_two() const;
  std::string to_string() const;
};

/// Local injectivity on stars, the collar model and the tripod side pattern,
/// checked vertex by vertex.
LocalModelReport validate_local_models(const TargetSurfaceMap& map);

/// A target triangle that is not the image of any source triangle.
std::optional<int> image_complement_witness(const TargetSurfaceMap& map);
inline bool image_complement_nonempty(const TargetSurfaceMap& map) { return image_complement_witness(map).has_value(); }

/// Map on the attached surface combining `map` with `patch_assignment` (patch
/// vertex -> target vertex). The attachment must not need subdivision.
/// Throws BoundaryMismatch, LocalModelFail, InvalidParameters.
TargetSurfaceMap validate_attached_map(const TargetSurfaceMap& map, const AttachmentSpec& spec,
                                       const std::vector<Vertex>& patch_assignment);

} // namespace bsurf
