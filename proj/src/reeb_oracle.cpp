#include "bsurf/reeb.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace bsurf {

namespace {

// Level set components at height h, as lists of crossed edges.
std::vector<std::set<int>> level_components(const SimplicialComplex2& s, const std::vector<Rational>& values,
                                            const Rational& h) {
  auto crosses = [&](int e) {
    const auto& ed = s.edges()[e];
    return (values[ed[0]] < h) != (values[ed[1]] < h);
  };
  std::map<int, std::vector<int>> adj;
  for (const auto& t : s.triangles()) {
    std::vector<int> hit;
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
      const int e = *s.edge_index(a, b);
      if (crosses(e)) hit.push_back(e);
    }
    if (hit.size() == 2) {
      adj[hit[0]].push_back(hit[1]);
      adj[hit[1]].push_back(hit[0]);
    }
  }
  std::vector<std::set<int>> out;
  std::set<int> seen;
  for (int e = 0; e < s.edge_count(); ++e) {
    if (!crosses(e) || seen.count(e)) continue;
    std::set<int> comp;
    std::queue<int> todo;
    todo.push(e);
    seen.insert(e);
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop();
      comp.insert(x);
      for (int y : adj[x]) {
        if (seen.insert(y).second) todo.push(y);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool touches(const SimplicialComplex2& s, const std::set<int>& comp, Vertex v) {
  return std::any_of(comp.begin(), comp.end(), [&](int e) { return s.edges()[e][0] == v || s.edges()[e][1] == v; });
}

} // namespace

ReebGraph reeb_graph_by_slices(const SimplicialComplex2& surface, const std::vector<Rational>& values) {
  value_ranks(surface, values);
  const int n = surface.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return values[a] < values[b]; });

  std::vector<std::vector<std::set<int>>> slices;
  for (int k = 0; k + 1 < n; ++k) {
    slices.push_back(level_components(surface, values, values[order[k]].midpoint(values[order[k + 1]])));
  }

  // Each slice component stands for one contour family; record the vertex or
  // the component it hangs from below and above.
  ReebGraph g;
  for (Vertex v : order) g.nodes.push_back({v, values[v]});
  std::vector<std::vector<int>> below(slices.size()), above(slices.size()); // node index or -(component+1)
  for (int k = 0; k < static_cast<int>(slices.size()); ++k) {
    below[k].assign(slices[k].size(), 0);
    above[k].assign(slices[k].size(), 0);
    for (int c = 0; c < static_cast<int>(slices[k].size()); ++c) {
      if (touches(surface, slices[k][c], order[k])) {
        below[k][c] = k;
      } else {
        for (int d = 0; d < static_cast<int>(slices[k - 1].size()); ++d) {
          const auto& other = slices[k - 1][d];
          if (std::any_of(other.begin(), other.end(), [&](int e) { return slices[k][c].count(e) > 0; })) {
            below[k][c] = -(d + 1);
          }
        }
      }
      above[k][c] = touches(surface, slices[k][c], order[k + 1]) ? k + 1 : 0;
    }
  }
  // Follow each chain of slice components from the vertex it starts at.
  for (int k = 0; k < static_cast<int>(slices.size()); ++k) {
    for (int c = 0; c < static_cast<int>(slices[k].size()); ++c) {
      if (below[k][c] < 0) continue;
      int slice = k;
      int comp = c;
      while (above[slice][comp] == 0) {
        const int next = slice + 1;
        int found = -1;
        for (int d = 0; d < static_cast<int>(slices[next].size()); ++d) {
          if (below[next][d] == -(comp + 1)) found = d;
        }
        slice = next;
        comp = found;
      }
      g.arcs.push_back({k, above[slice][comp]});
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

} // namespace bsurf
