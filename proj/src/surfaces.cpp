#include "bsurf/surfaces.hpp"

#include "bsurf/branch.hpp"
#include "bsurf/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace bsurf {

namespace {

std::vector<Triangle> torus7_triangles() {
  std::vector<Triangle> t;
  for (int i = 0; i < 7; ++i) {
    t.push_back(make_triangle(i, (i + 1) % 7, (i + 3) % 7));
    t.push_back(make_triangle(i, (i + 2) % 7, (i + 3) % 7));
  }
  return t;
}

std::vector<Triangle> rp2_triangles() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
}

bool all_cycle_links(const SimplicialComplex2& c, const Triangle& t) {
  return std::all_of(t.begin(), t.end(), [&](Vertex v) { return classify_link(c, v) == LinkType::Cycle; });
}

std::optional<int> first_interior_triangle(const SimplicialComplex2& c) {
  for (int i = 0; i < c.triangle_count(); ++i) {
    if (all_cycle_links(c, c.triangles()[i])) return i;
  }
  return std::nullopt;
}

// Removes an interior triangle of `base` and of `summand` and identifies the
// two boundary triangles vertex by vertex.
SimplicialComplex2 connected_sum(const SimplicialComplex2& base, const SimplicialComplex2& summand) {
  auto ta = first_interior_triangle(base);
  auto tb = first_interior_triangle(summand);
  if (!ta || !tb) throw Error(ErrorCode::InvalidParameters, "no interior triangle for a connected sum");
  const Triangle a = base.triangles()[*ta];
  const Triangle b = summand.triangles()[*tb];
  std::vector<Vertex> relabel(summand.vertex_count(), -1);
  for (int i = 0; i < 3; ++i) relabel[b[i]] = a[i];
  int next = base.vertex_count();
  for (Vertex v = 0; v < summand.vertex_count(); ++v) {
    if (relabel[v] < 0) relabel[v] = next++;
  }
  std::vector<Triangle> tris;
  for (int i = 0; i < base.triangle_count(); ++i) {
    if (i != *ta) tris.push_back(base.triangles()[i]);
  }
  for (int i = 0; i < summand.triangle_count(); ++i) {
    if (i == *tb) continue;
    const auto& t = summand.triangles()[i];
    tris.push_back(make_triangle(relabel[t[0]], relabel[t[1]], relabel[t[2]]));
  }
  return build_complex(std::move(tris), next);
}

// Cuts out an interior triangle and glues a triangulated annulus between its
// boundary and a fresh loop of `length` vertices. Returns the fresh loop.
std::vector<Vertex> punch_hole(SimplicialComplex2& c, int length) {
  auto ti = first_interior_triangle(c);
  if (!ti) throw Error(ErrorCode::InvalidParameters, "no interior triangle left for another boundary");
  const Triangle inner = c.triangles()[*ti];
  const int base = c.vertex_count();
  std::vector<Vertex> outer(length);
  for (int i = 0; i < length; ++i) outer[i] = base + i;
  std::vector<Triangle> tris;
  for (int i = 0; i < c.triangle_count(); ++i) {
    if (i != *ti) tris.push_back(c.triangles()[i]);
  }
  // Zipper between the inner triangle and the outer loop.
  int a = 0;
  int b = 0;
  while (a < 3 || b < length) {
    bool advance_inner = a < 3 && (b == length || (a + 1) * length <= (b + 1) * 3);
    if (advance_inner) {
      tris.push_back(make_triangle(inner[a], inner[(a + 1) % 3], outer[b % length]));
      ++a;
    } else {
      tris.push_back(make_triangle(inner[a % 3], outer[b], outer[(b + 1) % length]));
      ++b;
    }
  }
  c = build_complex(std::move(tris), base + length);
  return outer;
}

} // namespace

int CompactSurfaceModel::expected_euler_characteristic() const {
  return (orientable ? 2 - 2 * genus : 2 - genus) - boundary_count;
}

SimplicialComplex2 tetrahedron_boundary() {
  return build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 4);
}

SimplicialComplex2 octahedron() {
  // Poles 0 and 5, equator 1-2-3-4.
  return build_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}}, 6);
}

SimplicialComplex2 torus7() { return build_complex(torus7_triangles(), 7); }

SimplicialComplex2 projective_plane6() { return build_complex(rp2_triangles(), 6); }

CompactSurfaceModel make_surface(bool orientable, int genus_or_crosscaps, int boundary_count,
                                 const std::vector<int>& boundary_lengths) {
  if (genus_or_crosscaps < 0 || boundary_count < 0) {
    throw Error(ErrorCode::InvalidParameters, "genus and boundary count must be non-negative");
  }
  if (!orientable && genus_or_crosscaps < 1) {
    throw Error(ErrorCode::InvalidParameters, "a non-orientable surface needs at least one crosscap");
  }
  if (!boundary_lengths.empty() && static_cast<int>(boundary_lengths.size()) != boundary_count) {
    throw Error(ErrorCode::InvalidParameters, "one boundary length per boundary component expected");
  }
  for (int len : boundary_lengths) {
    if (len < 3) throw Error(ErrorCode::InvalidParameters, "boundary loops need at least three vertices");
  }
  SimplicialComplex2 c = tetrahedron_boundary();
  const SimplicialComplex2 summand = orientable ? torus7() : projective_plane6();
  for (int i = 0; i < genus_or_crosscaps; ++i) c = connected_sum(c, summand);
  // Every hole consumes one triangle; the collars add none that qualify.
  while (c.triangle_count() < boundary_count) c = barycentric_subdivide(c);
  CompactSurfaceModel s;
  s.orientable = orientable;
  s.genus = genus_or_crosscaps;
  s.boundary_count = boundary_count;
  for (int j = 0; j < boundary_count; ++j) {
    int len = boundary_lengths.empty() ? kDefaultBoundaryLength : boundary_lengths[j];
    s.boundaries.push_back(punch_hole(c, len));
  }
  s.triangulation = std::move(c);
  return s;
}

CompactSurfaceModel close_up(const CompactSurfaceModel& surface) {
  std::vector<Triangle> tris = surface.triangulation.triangles();
  const int base = surface.triangulation.vertex_count();
  for (int i = 0; i < static_cast<int>(surface.boundaries.size()); ++i) {
    const auto& loop = surface.boundaries[i];
    for (std::size_t k = 0; k < loop.size(); ++k) {
      tris.push_back(make_triangle(base + i, loop[k], loop[(k + 1) % loop.size()]));
    }
  }
  CompactSurfaceModel out;
  out.orientable = surface.orientable;
  out.genus = surface.genus;
  out.boundary_count = 0;
  out.triangulation = build_complex(std::move(tris), base + static_cast<int>(surface.boundaries.size()));
  return out;
}

AbelianGroup reference_h1_closed(bool orientable, int genus_or_crosscaps, Coeff coeff) {
  if (genus_or_crosscaps < 0 || (!orientable && genus_or_crosscaps < 1)) {
    throw Error(ErrorCode::InvalidParameters, "invalid closed surface parameters");
  }
  if (orientable) return AbelianGroup{2 * genus_or_crosscaps, {}};
  switch (coeff) {
    case Coeff::Integers: return AbelianGroup{genus_or_crosscaps - 1, {2}};
    case Coeff::Mod2: return AbelianGroup{genus_or_crosscaps, {}};
    case Coeff::Rationals: return AbelianGroup{genus_or_crosscaps - 1, {}};
  }
  return {};
}

bool is_closed_surface(const SimplicialComplex2& complex) {
  for (Vertex v = 0; v < complex.vertex_count(); ++v) {
    if (classify_link(complex, v) != LinkType::Cycle) return false;
  }
  return true;
}

bool is_surface_with_boundary(const SimplicialComplex2& complex) {
  for (Vertex v = 0; v < complex.vertex_count(); ++v) {
    LinkType t = classify_link(complex, v);
    if (t != LinkType::Cycle && t != LinkType::Path) return false;
  }
  return true;
}

std::optional<std::vector<Int>> fundamental_chain(const SimplicialComplex2& surface) {
  for (int e = 0; e < surface.edge_count(); ++e) {
    if (surface.edge_degree(e) > 2) return std::nullopt;
  }
  // Coefficient of edge e in the boundary of the ascending triangle t.
  auto incidence = [&](int t, int e) -> Int {
    const auto& [a, b, c] = surface.triangles()[t];
    const Edge& ed = surface.edges()[e];
    if (ed == Edge{b, c} || ed == Edge{a, b}) return 1;
    return -1;
  };
  std::vector<Int> sign(surface.triangle_count(), 0);
  for (int start = 0; start < surface.triangle_count(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      const auto& tri = surface.triangles()[t];
      for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        int e = *surface.edge_index(tri[i], tri[j]);
        for (int u : surface.edge_triangles(e)) {
          if (u == t) continue;
          Int want = -sign[t] * incidence(t, e) * incidence(u, e);
          if (sign[u] == 0) {
            sign[u] = want;
            queue.push_back(u);
          } else if (sign[u] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return sign;
}

std::optional<std::vector<std::vector<Vertex>>> boundary_loops(const SimplicialComplex2& surface) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (int e = 0; e < surface.edge_count(); ++e) {
    if (surface.edge_degree(e) != 1) continue;
    const auto& [a, b] = surface.edges()[e];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<Vertex> seen;
  std::vector<std::vector<Vertex>> loops;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() != 2) return std::nullopt;
    if (seen.count(v)) continue;
    std::vector<Vertex> loop{v};
    seen.insert(v);
    Vertex prev = v;
    Vertex cur = nbrs[0];
    while (cur != v) {
      if (seen.count(cur)) return std::nullopt;
      seen.insert(cur);
      loop.push_back(cur);
      const auto& n = adj[cur];
      if (n.size() != 2) return std::nullopt;
      Vertex next = n[0] == prev ? n[1] : n[0];
      prev = cur;
      cur = next;
    }
    loops.push_back(canonical_cycle(std::move(loop)));
  }
  return loops;
}

} // namespace bsurf
