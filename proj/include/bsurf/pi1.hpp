#pragma once

#include "bsurf/complex.hpp"
#include "bsurf/homology.hpp"

#include <string>
#include <vector>

namespace bsurf {

/// Letters are signed, 1-based generator indices: 3 is x3, -3 is x3^-1.
using Word = std::vector<int>;

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;

  bool is_free() const { return relators.empty(); }
  std::string to_string() const;
  bool operator==(const GroupPresentation& other) const = default;
};

/// Edge-path group: spanning tree by breadth-first search from the basepoint
/// (neighbors visited in ascending order); one generator per non-tree edge,
/// oriented from its smaller to its larger vertex; one relator per triangle.
struct EdgePathData {
  GroupPresentation presentation;
  Vertex basepoint = 0;
  std::vector<int> generator_edge; // edge index of generator i+1
  std::vector<bool> tree_edge;     // indexed by edge
};

/// Throws NotConnected or IndexOutOfRange.
EdgePathData edge_path_data(const SimplicialComplex2& complex, Vertex basepoint = 0);
GroupPresentation edge_path_presentation(const SimplicialComplex2& complex, Vertex basepoint = 0);

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);

AbelianGroup abelianization(const GroupPresentation& p);

/// Removes trivial relators, performs free and cyclic reduction, and
/// eliminates a generator occurring exactly once in some relator (shortest
/// relator first). Each elimination costs one step of the budget.
GroupPresentation tietze_simplify(const GroupPresentation& p, int step_budget);

/// Default budget used by the tools: ten steps per relator.
int default_tietze_budget(const GroupPresentation& p);

} // namespace bsurf
