#include "bsurf/complex.hpp"

#include "bsurf/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace bsurf {

namespace {

std::string triple_text(const Triangle& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

// Union-find over dense indices.
class DisjointSets {
public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

} // namespace

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::optional<int> SimplicialComplex2::edge_index(Vertex a, Vertex b) const {
  Edge e = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::optional<int> SimplicialComplex2::triangle_index(Vertex a, Vertex b, Vertex c) const {
  Triangle t = make_triangle(a, b, c);
  auto it = std::lower_bound(triangles_.begin(), triangles_.end(), t);
  if (it == triangles_.end() || *it != t) return std::nullopt;
  return static_cast<int>(it - triangles_.begin());
}

std::vector<Vertex> SimplicialComplex2::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(vertex_edges_[v].size());
  for (int e : vertex_edges_[v]) {
    out.push_back(edges_[e][0] == v ? edges_[e][1] : edges_[e][0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex2 build_complex(std::vector<Triangle> raw, int vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::IndexOutOfRange, "negative vertex count");
  }
  for (auto& t : raw) {
    for (Vertex v : t) {
      if (v < 0 || v >= vertex_count) {
        throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " in triangle " + triple_text(t));
      }
    }
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      throw Error(ErrorCode::DegenerateTriangle, "repeated vertex in " + triple_text(t));
    }
  }
  std::sort(raw.begin(), raw.end());
  if (auto dup = std::adjacent_find(raw.begin(), raw.end()); dup != raw.end()) {
    throw Error(ErrorCode::DuplicateTriangle, triple_text(*dup));
  }

  SimplicialComplex2 c;
  c.vertex_count_ = vertex_count;
  c.triangles_ = std::move(raw);

  std::vector<Edge> edges;
  edges.reserve(c.triangles_.size() * 3);
  for (const auto& t : c.triangles_) {
    edges.push_back({t[0], t[1]});
    edges.push_back({t[0], t[2]});
    edges.push_back({t[1], t[2]});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  c.edges_ = std::move(edges);

  c.edge_triangles_.assign(c.edges_.size(), {});
  c.vertex_triangles_.assign(vertex_count, {});
  c.vertex_edges_.assign(vertex_count, {});
  for (int ti = 0; ti < c.triangle_count(); ++ti) {
    const auto& t = c.triangles_[ti];
    for (Vertex v : t) c.vertex_triangles_[v].push_back(ti);
    c.edge_triangles_[*c.edge_index(t[0], t[1])].push_back(ti);
    c.edge_triangles_[*c.edge_index(t[0], t[2])].push_back(ti);
    c.edge_triangles_[*c.edge_index(t[1], t[2])].push_back(ti);
  }
  for (int ei = 0; ei < c.edge_count(); ++ei) {
    c.vertex_edges_[c.edges_[ei][0]].push_back(ei);
    c.vertex_edges_[c.edges_[ei][1]].push_back(ei);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (c.vertex_triangles_[v].empty()) {
      throw Error(ErrorCode::NonPure, "vertex " + std::to_string(v) + " lies in no triangle");
    }
  }
  return c;
}

const char* link_type_name(LinkType type) {
  switch (type) {
    case LinkType::Cycle: return "cycle";
    case LinkType::Path: return "path";
    case LinkType::Theta: return "theta";
    case LinkType::Other: return "other";
  }
  return "other";
}

LinkGraph link_graph(const SimplicialComplex2& complex, Vertex v) {
  if (v < 0 || v >= complex.vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v));
  }
  LinkGraph g;
  g.center = v;
  g.nodes = complex.neighbors(v);
  for (int ti : complex.vertex_triangles(v)) {
    const auto& t = complex.triangles()[ti];
    std::array<Vertex, 2> other{};
    int k = 0;
    for (Vertex x : t) {
      if (x != v) other[k++] = x;
    }
    g.arcs.emplace_back(other[0], other[1]);
  }
  return g;
}

LinkType classify_link(const SimplicialComplex2& complex, Vertex v) {
  LinkGraph g = link_graph(complex, v);
  const int n = static_cast<int>(g.nodes.size());
  auto local = [&](Vertex x) {
    return static_cast<int>(std::lower_bound(g.nodes.begin(), g.nodes.end(), x) - g.nodes.begin());
  };
  std::vector<std::vector<int>> adj(n);
  DisjointSets sets(n);
  for (auto [a, b] : g.arcs) {
    int la = local(a);
    int lb = local(b);
    adj[la].push_back(lb);
    adj[lb].push_back(la);
    sets.unite(la, lb);
  }
  for (int i = 1; i < n; ++i) {
    if (sets.find(i) != sets.find(0)) return LinkType::Other;
  }
  const int arcs = static_cast<int>(g.arcs.size());
  int deg1 = 0;
  int deg2 = 0;
  std::vector<int> deg3;
  for (int i = 0; i < n; ++i) {
    switch (adj[i].size()) {
      case 1: ++deg1; break;
      case 2: ++deg2; break;
      case 3: deg3.push_back(i); break;
      default: return LinkType::Other;
    }
  }
  if (deg1 == 0 && deg3.empty() && arcs == n) return LinkType::Cycle;
  if (deg1 == 2 && deg3.empty() && arcs == n - 1) return LinkType::Path;
  if (deg1 == 0 && deg3.size() == 2 && arcs == n + 1) {
    // Two degree-3 nodes: theta iff every branch leaving one hub ends at the other.
    for (int start : adj[deg3[0]]) {
      int prev = deg3[0];
      int cur = start;
      while (adj[cur].size() == 2) {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
      if (cur != deg3[1]) return LinkType::Other;
    }
    return LinkType::Theta;
  }
  return LinkType::Other;
}

int euler_characteristic(const SimplicialComplex2& complex) {
  return complex.vertex_count() - complex.edge_count() + complex.triangle_count();
}

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex2& complex) {
  DisjointSets sets(complex.vertex_count());
  for (const auto& e : complex.edges()) sets.unite(e[0], e[1]);
  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < complex.vertex_count(); ++v) groups[sets.find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

SimplicialComplex2 barycentric_subdivide(const SimplicialComplex2& complex) {
  const int nv = complex.vertex_count();
  const int ne = complex.edge_count();
  std::vector<Triangle> out;
  out.reserve(complex.triangles().size() * 6);
  for (int ti = 0; ti < complex.triangle_count(); ++ti) {
    const auto& t = complex.triangles()[ti];
    const Vertex center = nv + ne + ti;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const Vertex mid = nv + *complex.edge_index(t[i], t[j]);
        out.push_back(make_triangle(t[i], mid, center));
      }
    }
  }
  return build_complex(std::move(out), nv + ne + complex.triangle_count());
}

std::vector<Vertex> subdivide_loop(const SimplicialComplex2& complex, std::span<const Vertex> loop) {
  std::vector<Vertex> out;
  out.reserve(loop.size() * 2);
  for (std::size_t i = 0; i < loop.size(); ++i) {
    Vertex a = loop[i];
    Vertex b = loop[(i + 1) % loop.size()];
    auto e = complex.edge_index(a, b);
    if (!e) {
      throw Error(ErrorCode::NotACycle, "loop vertices " + std::to_string(a) + " and " + std::to_string(b) +
                                            " are not joined by an edge");
    }
    out.push_back(a);
    out.push_back(complex.vertex_count() + *e);
  }
  return out;
}

SimplicialComplex2 disjoint_union(const SimplicialComplex2& a, const SimplicialComplex2& b) {
  std::vector<Triangle> tris = a.triangles();
  const int shift = a.vertex_count();
  for (const auto& t : b.triangles()) tris.push_back({t[0] + shift, t[1] + shift, t[2] + shift});
  return build_complex(std::move(tris), a.vertex_count() + b.vertex_count());
}

bool is_simple_edge_loop(const SimplicialComplex2& complex, std::span<const Vertex> loop) {
  if (loop.size() < 3) return false;
  std::vector<Vertex> sorted(loop.begin(), loop.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    Vertex a = loop[i];
    Vertex b = loop[(i + 1) % loop.size()];
    if (a < 0 || a >= complex.vertex_count() || !complex.edge_index(a, b)) return false;
  }
  return true;
}

} // namespace bsurf
