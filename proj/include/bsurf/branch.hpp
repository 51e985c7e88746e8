#pragma once

#include "bsurf/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bsurf {

enum class CircleKind { Collar, Tripod };
enum class Monodromy { Identity, Transposition };

const char* circle_kind_name(CircleKind kind);
const char* monodromy_name(Monodromy m);

struct BranchCircle {
  std::vector<Vertex> cycle; // starts at its smallest vertex, then toward the smaller neighbor
  CircleKind kind = CircleKind::Collar;
  std::optional<Monodromy> monodromy; // filled in by validation; always Identity for collars
};

struct BranchLocus {
  std::vector<BranchCircle> circles; // ordered by smallest vertex

  bool contains_vertex(Vertex v) const;
  int count(CircleKind kind) const;
};

struct BranchedSurface {
  SimplicialComplex2 complex;
  BranchLocus locus;
  bool normal = true;
};

/// Groups all edges lying in a number of triangles other than two into disjoint
/// vertex cycles and checks the local structure around every vertex.
/// Throws NotABranchedSurface.
BranchLocus detect_branch_locus(const SimplicialComplex2& complex);

/// Permutation of the local sheets after one trip around `circle`.
/// For a collar circle this is the trivial permutation of its single sheet.
/// Throws IllegalMonodromy for a 3-cycle, NotABranchedSurface if the
/// neighborhood is not a bundle over the circle.
Monodromy tripod_monodromy(const SimplicialComplex2& complex, const BranchCircle& circle);

/// Full check; `normal` is set when every tripod circle has trivial monodromy.
BranchedSurface validate_branched_surface(const SimplicialComplex2& complex);

/// Same cycle up to rotation and reversal.
bool same_cycle(const std::vector<Vertex>& a, const std::vector<Vertex>& b);

/// Rotates and orients a vertex cycle into the canonical form used by BranchCircle.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

} // namespace bsurf
