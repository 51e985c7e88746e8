#pragma once

#include "bsurf/complex.hpp"
#include "bsurf/rational.hpp"

#include <string>
#include <vector>

namespace bsurf {

struct ReebNode {
  Vertex vertex = 0;
  Rational value;
};

/// Arc between two nodes; `lower` has the smaller value.
struct ReebArc {
  int lower = 0;
  int upper = 0;

  auto operator<=>(const ReebArc&) const = default;
};

/// Reeb graph of a PL function. Nodes are ordered by value, arcs
/// lexicographically; parallel arcs are kept.
struct ReebGraph {
  std::vector<ReebNode> nodes;
  std::vector<ReebArc> arcs;

  int component_count() const;
  std::vector<int> degrees() const;
  std::string to_string() const;
};

/// Position of each vertex in increasing value order.
/// Throws NotClosedSurface, DuplicateValues, InvalidParameters.
std::vector<int> value_ranks(const SimplicialComplex2& surface, const std::vector<Rational>& values);

/// Sweep in increasing value with union-find over the contour edges. Nodes
/// sit at vertices whose lower or upper link does not have exactly one
/// component. Throws NotClosedSurface, DuplicateValues, InvalidParameters.
ReebGraph reeb_graph(const SimplicialComplex2& surface, const std::vector<Rational>& values);

/// Brute-force construction from level sets at the midpoints between
/// consecutive values. Every vertex becomes a node before reduction.
ReebGraph reeb_graph_by_slices(const SimplicialComplex2& surface, const std::vector<Rational>& values);

/// Removes nodes with exactly one arc below and one above, joining their arcs.
ReebGraph reduce_regular_nodes(const ReebGraph& g);

/// Same node values and the same arcs between them after reduction.
bool reeb_isomorphic(const ReebGraph& a, const ReebGraph& b);

/// E - V + C.
int reeb_betti1(const ReebGraph& g);

} // namespace bsurf
