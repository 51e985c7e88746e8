#include "bsurf/fixtures.hpp"

#include "bsurf/error.hpp"

#include <algorithm>
#include <numeric>

namespace bsurf {

SheetBundle sheet_bundle(int n, int legs, std::vector<int> seam) {
  if (n < 3 || legs < 1) throw Error(ErrorCode::InvalidParameters, "sheet bundle needs n >= 3 and a leg");
  if (seam.empty()) {
    seam.resize(legs);
    std::iota(seam.begin(), seam.end(), 0);
  }
  if (static_cast<int>(seam.size()) != legs) throw Error(ErrorCode::InvalidParameters, "seam size mismatch");
  std::vector<bool> hit(legs, false);
  for (int s : seam) {
    if (s < 0 || s >= legs || hit[s]) throw Error(ErrorCode::InvalidParameters, "seam is not a permutation");
    hit[s] = true;
  }
  SheetBundle b;
  b.n = n;
  b.legs = legs;
  for (int i = 0; i < n; ++i) b.core.push_back(i);
  b.outer.assign(legs, std::vector<Vertex>(n));
  for (int leg = 0; leg < legs; ++leg) {
    for (int i = 0; i < n; ++i) b.outer[leg][i] = n + leg * n + i;
  }
  std::vector<Triangle> tris;
  for (int leg = 0; leg < legs; ++leg) {
    for (int i = 0; i < n; ++i) {
      const bool last = i == n - 1;
      Vertex c0 = b.core[i];
      Vertex c1 = b.core[(i + 1) % n];
      Vertex a0 = b.outer[leg][i];
      Vertex a1 = last ? b.outer[seam[leg]][0] : b.outer[leg][i + 1];
      tris.push_back(make_triangle(c0, c1, a0));
      tris.push_back(make_triangle(c1, a0, a1));
    }
  }
  b.complex = build_complex(std::move(tris), n + legs * n);
  // Outer rows chain together along the cycles of the seam permutation.
  std::vector<bool> used(legs, false);
  for (int leg = 0; leg < legs; ++leg) {
    if (used[leg]) continue;
    std::vector<Vertex> loop;
    for (int cur = leg; !used[cur]; cur = seam[cur]) {
      used[cur] = true;
      loop.insert(loop.end(), b.outer[cur].begin(), b.outer[cur].end());
    }
    b.free_circles.push_back(std::move(loop));
  }
  return b;
}

SheetBundle capped_sheet_bundle(int n, int legs, std::vector<int> seam) {
  SheetBundle b = sheet_bundle(n, legs, std::move(seam));
  std::vector<Triangle> tris = b.complex.triangles();
  int next = b.complex.vertex_count();
  for (const auto& loop : b.free_circles) {
    const Vertex apex = next++;
    b.apexes.push_back(apex);
    for (std::size_t k = 0; k < loop.size(); ++k) {
      tris.push_back(make_triangle(apex, loop[k], loop[(k + 1) % loop.size()]));
    }
  }
  b.complex = build_complex(std::move(tris), next);
  return b;
}

SimplicialComplex2 open_book() { return build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}, 5); }

std::vector<Vertex> separated_vertices(const SimplicialComplex2& complex, const std::vector<Vertex>& order, int count,
                                       const std::set<Vertex>& avoid) {
  std::set<Vertex> used = avoid;
  std::vector<Vertex> out;
  for (Vertex v : order) {
    if (static_cast<int>(out.size()) == count) break;
    if (classify_link(complex, v) != LinkType::Cycle) continue;
    std::vector<Vertex> star = complex.neighbors(v);
    star.push_back(v);
    if (std::any_of(star.begin(), star.end(), [&](Vertex w) { return used.count(w) > 0; })) continue;
    used.insert(star.begin(), star.end());
    out.push_back(v);
  }
  return out;
}

SimplicialComplex2 ring_annulus(int n, int rings) {
  if (n < 3 || rings < 2) throw Error(ErrorCode::InvalidParameters, "ring annulus needs n >= 3 and two rings");
  std::vector<Triangle> tris;
  for (int r = 0; r + 1 < rings; ++r) {
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      tris.push_back(make_triangle(r * n + i, r * n + j, (r + 1) * n + i));
      tris.push_back(make_triangle(r * n + j, (r + 1) * n + i, (r + 1) * n + j));
    }
  }
  return build_complex(std::move(tris), n * rings);
}

std::vector<Vertex> bundle_projection(const SheetBundle& bundle, int rings) {
  if (bundle.legs != 3 || rings < 3 || rings % 2 == 0) {
    throw Error(ErrorCode::InvalidParameters, "projection needs three legs and an odd number of rings");
  }
  const int n = bundle.n;
  const int m = rings / 2;
  std::vector<Vertex> out(bundle.complex.vertex_count(), -1);
  for (int i = 0; i < n; ++i) out[bundle.core[i]] = m * n + i;
  for (int leg = 0; leg < 3; ++leg) {
    for (int i = 0; i < n; ++i) {
      out[bundle.outer[leg][i]] = leg == 0 ? (m - 1) * n + (i + 1) % n : (m + 1) * n + i;
    }
  }
  return out;
}

CompactSurfaceModel cone_patch(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameters, "cone needs a loop of length at least 3");
  CompactSurfaceModel s;
  s.orientable = true;
  s.genus = 0;
  s.boundary_count = 1;
  std::vector<Triangle> tris;
  std::vector<Vertex> loop;
  for (int i = 0; i < n; ++i) {
    tris.push_back(make_triangle(n, i, (i + 1) % n));
    loop.push_back(i);
  }
  s.triangulation = build_complex(std::move(tris), n + 1);
  s.boundaries = {loop};
  return s;
}

} // namespace bsurf
