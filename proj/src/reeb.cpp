#include "bsurf/reeb.hpp"

#include "bsurf/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bsurf {

namespace {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
  std::vector<int> parent_;
};

// Number of components of the link of v restricted to vertices on one side.
int link_side_components(const SimplicialComplex2& s, Vertex v, const std::vector<int>& rank, bool below) {
  const LinkGraph g = link_graph(s, v);
  auto on_side = [&](Vertex w) { return below ? rank[w] < rank[v] : rank[w] > rank[v]; };
  std::map<Vertex, int> index;
  for (Vertex w : g.nodes) {
    if (on_side(w)) index.emplace(w, static_cast<int>(index.size()));
  }
  UnionFind uf(static_cast<int>(index.size()));
  for (auto [a, b] : g.arcs) {
    if (on_side(a) && on_side(b)) uf.unite(index[a], index[b]);
  }
  std::set<int> roots;
  for (auto& [w, i] : index) roots.insert(uf.find(i));
  return static_cast<int>(roots.size());
}

} // namespace

int ReebGraph::component_count() const {
  UnionFind uf(static_cast<int>(nodes.size()));
  for (const auto& a : arcs) uf.unite(a.lower, a.upper);
  std::set<int> roots;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) roots.insert(uf.find(i));
  return static_cast<int>(roots.size());
}

std::vector<int> ReebGraph::degrees() const {
  std::vector<int> d(nodes.size(), 0);
  for (const auto& a : arcs) {
    ++d[a.lower];
    ++d[a.upper];
  }
  return d;
}

std::string ReebGraph::to_string() const {
  std::ostringstream os;
  os << "nodes " << nodes.size() << "\n";
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    os << "node " << i << " vertex " << nodes[i].vertex << " value " << nodes[i].value.to_string() << "\n";
  }
  os << "arcs " << arcs.size() << "\n";
  for (const auto& a : arcs) os << "arc " << a.lower << " " << a.upper << "\n";
  os << "betti1 " << reeb_betti1(*this) << "\n";
  return os.str();
}

int reeb_betti1(const ReebGraph& g) {
  return static_cast<int>(g.arcs.size()) - static_cast<int>(g.nodes.size()) + g.component_count();
}

std::vector<int> value_ranks(const SimplicialComplex2& surface, const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != surface.vertex_count()) {
    throw Error(ErrorCode::InvalidParameters, "one value per vertex expected");
  }
  for (Vertex v = 0; v < surface.vertex_count(); ++v) {
    if (classify_link(surface, v) != LinkType::Cycle) {
      throw Error(ErrorCode::NotClosedSurface, "vertex " + std::to_string(v) + " has no cycle link");
    }
  }
  std::vector<Vertex> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return values[a] < values[b]; });
  std::vector<int> rank(values.size());
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    if (k > 0 && values[order[k]] == values[order[k - 1]]) {
      throw Error(ErrorCode::DuplicateValues, "vertices " + std::to_string(order[k - 1]) + " and " +
                                                  std::to_string(order[k]) + " share value " +
                                                  values[order[k]].to_string());
    }
    rank[order[k]] = k;
  }
  return rank;
}

ReebGraph reeb_graph(const SimplicialComplex2& surface, const std::vector<Rational>& values) {
  const std::vector<int> rank = value_ranks(surface, values);
  std::vector<Vertex> order(values.size());
  for (Vertex v = 0; v < static_cast<Vertex>(rank.size()); ++v) order[rank[v]] = v;

  const auto& edges = surface.edges();
  auto lo = [&](int e) { return std::min(rank[edges[e][0]], rank[edges[e][1]]); };
  auto hi = [&](int e) { return std::max(rank[edges[e][0]], rank[edges[e][1]]); };

  ReebGraph g;
  std::vector<int> arc_start; // open arc id -> node where it began
  std::vector<int> arc_of_edge(surface.edge_count(), -1);
  std::vector<std::vector<int>> edge_neighbors(surface.edge_count());
  for (const auto& t : surface.triangles()) {
    const int e[3] = {*surface.edge_index(t[0], t[1]), *surface.edge_index(t[0], t[2]), *surface.edge_index(t[1], t[2])};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j) edge_neighbors[e[i]].push_back(e[j]);
      }
    }
  }

  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    const Vertex v = order[k];
    std::vector<int> lower_edges, upper_edges;
    for (int e : surface.vertex_edges(v)) (lo(e) < k ? lower_edges : upper_edges).push_back(e);
    const bool critical = link_side_components(surface, v, rank, true) != 1 ||
                          link_side_components(surface, v, rank, false) != 1;
    if (!critical) {
      const int arc = arc_of_edge[lower_edges.front()];
      for (int e : lower_edges) arc_of_edge[e] = -1;
      for (int e : upper_edges) arc_of_edge[e] = arc;
      continue;
    }
    const int node = static_cast<int>(g.nodes.size());
    g.nodes.push_back({v, values[v]});
    std::set<int> ended;
    for (int e : lower_edges) ended.insert(arc_of_edge[e]);
    for (int arc : ended) g.arcs.push_back({arc_start[arc], node});
    for (int e : lower_edges) arc_of_edge[e] = -1;

    // Contours through v after the step: the rest of the ended contours and
    // the edges leaving v upward.
    std::vector<int> members = upper_edges;
    for (int e = 0; e < surface.edge_count(); ++e) {
      if (arc_of_edge[e] >= 0 && ended.count(arc_of_edge[e])) members.push_back(e);
    }
    std::map<int, int> slot;
    for (int e : members) slot.emplace(e, static_cast<int>(slot.size()));
    UnionFind uf(static_cast<int>(slot.size()));
    for (int e : members) {
      for (int f : edge_neighbors[e]) {
        if (lo(f) <= k && hi(f) > k) {
          auto it = slot.find(f);
          if (it != slot.end()) uf.unite(slot[e], it->second);
        }
      }
    }
    std::map<int, int> new_arc;
    for (int e : members) {
      const int root = uf.find(slot[e]);
      auto [it, fresh] = new_arc.emplace(root, static_cast<int>(arc_start.size()));
      if (fresh) arc_start.push_back(node);
      arc_of_edge[e] = it->second;
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

ReebGraph reduce_regular_nodes(const ReebGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::vector<int>> down(n), up(n); // arc indices
  std::vector<ReebArc> arcs = g.arcs;
  std::vector<bool> alive(arcs.size(), true);
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    up[arcs[i].lower].push_back(i);
    down[arcs[i].upper].push_back(i);
  }
  std::vector<bool> keep(n, true);
  for (int v = 0; v < n; ++v) {
    if (down[v].size() != 1 || up[v].size() != 1) continue;
    keep[v] = false;
    const int a = down[v][0];
    const int b = up[v][0];
    // Extend arc a over b.
    const int top = arcs[b].upper;
    alive[b] = false;
    arcs[a].upper = top;
    std::replace(down[top].begin(), down[top].end(), b, a);
  }
  ReebGraph out;
  std::vector<int> index(n, -1);
  for (int v = 0; v < n; ++v) {
    if (keep[v]) {
      index[v] = static_cast<int>(out.nodes.size());
      out.nodes.push_back(g.nodes[v]);
    }
  }
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    if (alive[i]) out.arcs.push_back({index[arcs[i].lower], index[arcs[i].upper]});
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

bool reeb_isomorphic(const ReebGraph& a, const ReebGraph& b) {
  const ReebGraph ra = reduce_regular_nodes(a);
  const ReebGraph rb = reduce_regular_nodes(b);
  if (ra.nodes.size() != rb.nodes.size()) return false;
  for (std::size_t i = 0; i < ra.nodes.size(); ++i) {
    if (!(ra.nodes[i].value == rb.nodes[i].value) || ra.nodes[i].vertex != rb.nodes[i].vertex) return false;
  }
  return ra.arcs == rb.arcs;
}

} // namespace bsurf
