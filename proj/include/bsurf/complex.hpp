#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bsurf {

using Vertex = int;
using Edge = std::array<Vertex, 2>;     // sorted ascending
using Triangle = std::array<Vertex, 3>; // sorted ascending

Edge make_edge(Vertex a, Vertex b);
Triangle make_triangle(Vertex a, Vertex b, Vertex c);

/// Pure simplicial 2-complex. Edges are derived from the triangles and every
/// simplex list is kept in lexicographic order, so matrix layouts built on top
/// of it are reproducible.
class SimplicialComplex2 {
public:
  SimplicialComplex2() = default;

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int triangle_count() const { return static_cast<int>(triangles_.size()); }
  bool empty() const { return vertex_count_ == 0; }

  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<int> edge_index(Vertex a, Vertex b) const;
  std::optional<int> triangle_index(Vertex a, Vertex b, Vertex c) const;

  /// Triangles containing edge `e`, ascending.
  const std::vector<int>& edge_triangles(int e) const { return edge_triangles_[e]; }
  int edge_degree(int e) const { return static_cast<int>(edge_triangles_[e].size()); }
  /// Triangles containing vertex `v`, ascending.
  const std::vector<int>& vertex_triangles(Vertex v) const { return vertex_triangles_[v]; }
  /// Edges containing vertex `v`, ascending.
  const std::vector<int>& vertex_edges(Vertex v) const { return vertex_edges_[v]; }
  /// Vertices adjacent to `v`, ascending.
  std::vector<Vertex> neighbors(Vertex v) const;

  bool operator==(const SimplicialComplex2& other) const {
    return vertex_count_ == other.vertex_count_ && triangles_ == other.triangles_;
  }

private:
  friend SimplicialComplex2 build_complex(std::vector<Triangle> raw, int vertex_count);

  int vertex_count_ = 0;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> edge_triangles_;
  std::vector<std::vector<int>> vertex_triangles_;
  std::vector<std::vector<int>> vertex_edges_;
};

/// Validates and canonicalizes a list of vertex triples.
/// Throws Error with DegenerateTriangle, IndexOutOfRange, DuplicateTriangle or NonPure.
SimplicialComplex2 build_complex(std::vector<Triangle> raw, int vertex_count);

struct LinkGraph {
  Vertex center = 0;
  std::vector<Vertex> nodes;                      // ascending
  std::vector<std::pair<Vertex, Vertex>> arcs;    // one per triangle at the center
};

enum class LinkType { Cycle, Path, Theta, Other };

const char* link_type_name(LinkType type);

LinkGraph link_graph(const SimplicialComplex2& complex, Vertex v);
LinkType classify_link(const SimplicialComplex2& complex, Vertex v);

int euler_characteristic(const SimplicialComplex2& complex);

/// Vertex sets of the connected components, each ascending, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex2& complex);

/// Standard barycentric subdivision. Vertex `v` keeps its index, the midpoint of
/// edge `e` becomes V + e and the barycenter of triangle `t` becomes V + E + t.
SimplicialComplex2 barycentric_subdivide(const SimplicialComplex2& complex);

/// Image of a closed vertex loop under barycentric_subdivide (length doubles).
std::vector<Vertex> subdivide_loop(const SimplicialComplex2& complex, std::span<const Vertex> loop);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
SimplicialComplex2 disjoint_union(const SimplicialComplex2& a, const SimplicialComplex2& b);

/// Checks that consecutive loop vertices (cyclically) span edges and that the
/// loop visits no vertex twice.
bool is_simple_edge_loop(const SimplicialComplex2& complex, std::span<const Vertex> loop);

} // namespace bsurf
