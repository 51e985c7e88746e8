#include "bsurf/surgery.hpp"

#include "bsurf/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bsurf {

const char* glue_direction_name(GlueDirection d) { return d == GlueDirection::Aligned ? "aligned" : "reversed"; }

const char* orientability_name(Orientability o) {
  return o == Orientability::Orientable ? "orientable" : "non-orientable";
}

namespace {

// Smallest k >= 0 with a * 2^k == b, if any.
std::optional<int> doubling_steps(int a, int b) {
  for (int k = 0; a <= b; ++k, a *= 2) {
    if (a == b) return k;
  }
  return std::nullopt;
}

constexpr int kMaxSubdivisions = 3;

} // namespace

std::vector<Triangle> vertex_star(const SimplicialComplex2& complex, Vertex v) {
  std::vector<Triangle> out;
  for (int t : complex.vertex_triangles(v)) out.push_back(complex.triangles()[t]);
  return out;
}

std::vector<Vertex> link_cycle(const SimplicialComplex2& complex, Vertex v) {
  if (classify_link(complex, v) != LinkType::Cycle) {
    throw Error(ErrorCode::InvalidParameters, "vertex " + std::to_string(v) + " has no cycle link");
  }
  LinkGraph g = link_graph(complex, v);
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto [a, b] : g.arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<Vertex> cycle{g.nodes.front()};
  Vertex prev = -1;
  Vertex cur = g.nodes.front();
  for (;;) {
    const auto& nb = adj[cur];
    Vertex next = prev < 0 ? std::min(nb[0], nb[1]) : (nb[0] == prev ? nb[1] : nb[0]);
    if (next == cycle.front()) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  return cycle;
}

std::optional<std::vector<Vertex>> disk_boundary(const SimplicialComplex2& complex, const std::vector<Triangle>& disk) {
  if (disk.empty()) return std::nullopt;
  std::map<Vertex, Vertex> local;
  std::vector<Vertex> global;
  for (const auto& t : disk) {
    if (!complex.triangle_index(t[0], t[1], t[2])) return std::nullopt;
    for (Vertex v : t) {
      if (local.emplace(v, static_cast<Vertex>(global.size())).second) global.push_back(v);
    }
  }
  std::vector<Triangle> tris;
  for (const auto& t : disk) tris.push_back(make_triangle(local[t[0]], local[t[1]], local[t[2]]));
  SimplicialComplex2 d;
  try {
    d = build_complex(tris, static_cast<int>(global.size()));
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!is_surface_with_boundary(d) || connected_components(d).size() != 1 || euler_characteristic(d) != 1) {
    return std::nullopt;
  }
  auto loops = boundary_loops(d);
  if (!loops || loops->size() != 1) return std::nullopt;
  std::vector<Vertex> out;
  for (Vertex v : loops->front()) out.push_back(global[v]);
  return out;
}

AttachmentResult attach_surface(const AttachmentSpec& spec) {
  const int l = static_cast<int>(spec.circles.size());
  if (l < 1) throw Error(ErrorCode::InvalidParameters, "at least one circle is required");
  if (spec.patch.boundary_count != l || static_cast<int>(spec.patch.boundaries.size()) != l) {
    throw Error(ErrorCode::InvalidParameters, "patch has " + std::to_string(spec.patch.boundaries.size()) +
                                                  " boundary circles, expected " + std::to_string(l));
  }
  if (!spec.directions.empty() && static_cast<int>(spec.directions.size()) != l) {
    throw Error(ErrorCode::InvalidParameters, "one gluing direction per circle expected");
  }
  const SimplicialComplex2& host = spec.host.complex;
  std::set<Vertex> used;
  for (int j = 0; j < l; ++j) {
    const auto& c = spec.circles[j];
    for (Vertex v : c) {
      if (v < 0 || v >= host.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "circle vertex out of range");
    }
    if (!is_simple_edge_loop(host, c)) throw Error(ErrorCode::NotACycle, "circle " + std::to_string(j));
    for (Vertex v : c) {
      if (spec.host.locus.contains_vertex(v)) {
        throw Error(ErrorCode::CirclesIntersectLocus, "circle " + std::to_string(j) + " meets the branch locus at " +
                                                          std::to_string(v));
      }
      if (!used.insert(v).second) throw Error(ErrorCode::NotDisjoint, "circles share vertex " + std::to_string(v));
    }
  }

  int host_steps = 0;
  int patch_steps = 0;
  for (int j = 0; j < l; ++j) {
    const int t = static_cast<int>(spec.circles[j].size());
    const int b = static_cast<int>(spec.patch.boundaries[j].size());
    int hs = 0;
    int ps = 0;
    if (auto k = doubling_steps(t, b)) {
      hs = *k;
    } else if (auto k2 = doubling_steps(b, t)) {
      ps = *k2;
    } else {
      throw Error(ErrorCode::LengthMismatch, "circle " + std::to_string(j) + " has length " + std::to_string(t) +
                                                 ", boundary has length " + std::to_string(b));
    }
    if (j == 0) {
      host_steps = hs;
      patch_steps = ps;
    } else if (hs != host_steps || ps != patch_steps) {
      throw Error(ErrorCode::LengthMismatch, "loop length ratios differ between circles");
    }
  }
  if (host_steps > kMaxSubdivisions || patch_steps > kMaxSubdivisions) {
    throw Error(ErrorCode::LengthMismatch, "loop lengths need more than three subdivisions to match");
  }

  AttachmentResult out;
  out.host = spec.host;
  out.circles = spec.circles;
  for (int k = 0; k < host_steps; ++k) {
    for (auto& c : out.circles) c = subdivide_loop(out.host.complex, c);
    out.host.complex = barycentric_subdivide(out.host.complex);
  }
  if (host_steps > 0) out.host = validate_branched_surface(out.host.complex);
  out.patch = spec.patch;
  for (int k = 0; k < patch_steps; ++k) {
    for (auto& c : out.patch.boundaries) c = subdivide_loop(out.patch.triangulation, c);
    out.patch.triangulation = barycentric_subdivide(out.patch.triangulation);
  }
  out.host_subdivisions = host_steps;
  out.patch_subdivisions = patch_steps;

  const SimplicialComplex2& h = out.host.complex;
  const SimplicialComplex2& p = out.patch.triangulation;
  out.patch_to_result.assign(p.vertex_count(), -1);
  for (int j = 0; j < l; ++j) {
    const auto& boundary = out.patch.boundaries[j];
    const auto& circle = out.circles[j];
    const int len = static_cast<int>(boundary.size());
    const bool reversed = !spec.directions.empty() && spec.directions[j] == GlueDirection::Reversed;
    for (int i = 0; i < len; ++i) out.patch_to_result[boundary[i]] = circle[reversed ? (len - i) % len : i];
  }
  Vertex next = h.vertex_count();
  for (auto& v : out.patch_to_result) {
    if (v < 0) v = next++;
  }
  std::vector<Triangle> tris = h.triangles();
  for (const auto& t : p.triangles()) {
    tris.push_back(make_triangle(out.patch_to_result[t[0]], out.patch_to_result[t[1]], out.patch_to_result[t[2]]));
  }
  out.surface = validate_branched_surface(build_complex(std::move(tris), next));
  return out;
}

AttachmentSpec bubble_spec(const BranchedSurface& host, const std::vector<std::vector<Triangle>>& disks) {
  if (disks.empty()) throw Error(ErrorCode::InvalidParameters, "at least one disk is required");
  std::map<Vertex, int> owner;
  AttachmentSpec spec;
  spec.host = host;
  std::vector<int> lengths;
  for (int j = 0; j < static_cast<int>(disks.size()); ++j) {
    for (const auto& t : disks[j]) {
      for (Vertex v : t) {
        if (v < 0 || v >= host.complex.vertex_count()) {
          throw Error(ErrorCode::IndexOutOfRange, "disk vertex " + std::to_string(v));
        }
        if (host.locus.contains_vertex(v)) {
          throw Error(ErrorCode::DiskTouchesLocus, "disk " + std::to_string(j) + " touches the locus at " +
                                                       std::to_string(v));
        }
        auto [it, fresh] = owner.emplace(v, j);
        if (!fresh && it->second != j) {
          throw Error(ErrorCode::DisksOverlap, "disks " + std::to_string(it->second) + " and " + std::to_string(j) +
                                                   " share vertex " + std::to_string(v));
        }
      }
    }
    auto loop = disk_boundary(host.complex, disks[j]);
    if (!loop) throw Error(ErrorCode::InvalidParameters, "disk " + std::to_string(j) + " is not an embedded disk");
    lengths.push_back(static_cast<int>(loop->size()));
    spec.circles.push_back(std::move(*loop));
  }
  spec.patch = make_surface(true, 0, static_cast<int>(disks.size()), lengths);
  return spec;
}

AttachmentResult bubble_attach(const BranchedSurface& host, const std::vector<std::vector<Triangle>>& disks) {
  return attach_surface(bubble_spec(host, disks));
}

Thm1Prediction predict_thm1(const HomologySummary& host_homology, const HomologySummary& host_cohomology, int l,
                            bool patch_orientable, int patch_genus) {
  if (l < 1) throw Error(ErrorCode::InvalidL, "l must be at least 1");
  const Coeff coeff = host_homology.coeff;
  const AbelianGroup closed_h1 = reference_h1_closed(patch_orientable, patch_genus, coeff);
  // Hom(H1, A) kills torsion over the integers and is H1 itself over a field.
  const AbelianGroup closed_ch1 = coeff == Coeff::Integers ? AbelianGroup{closed_h1.rank, {}} : closed_h1;
  const AbelianGroup bridges = ring_module(l - 1);
  Thm1Prediction out;
  out.coeff = coeff;
  out.h1 = host_homology.degree[1].direct_sum(bridges).direct_sum(closed_h1);
  out.h2 = host_homology.degree[2].direct_sum(ring_module());
  out.ch1 = host_cohomology.degree[1].direct_sum(closed_ch1).direct_sum(bridges);
  if (out.h1.is_free()) out.ch2 = host_cohomology.degree[2].direct_sum(ring_module());
  return out;
}

HeegaardLedger apply_heegaard(HeegaardLedger ledger, int l, Orientability target) {
  if (l < 1) throw Error(ErrorCode::InvalidL, "l must be at least 1");
  if (ledger.ambient == Orientability::NonOrientable && target == Orientability::Orientable) {
    throw Error(ErrorCode::InvalidParameters, "a non-orientable ambient manifold cannot become orientable");
  }
  HeegaardRecord r;
  r.l = l;
  r.target = target;
  r.genus_before = ledger.genus_bound;
  ledger.genus_bound += l - 1;
  r.genus_after = ledger.genus_bound;
  ledger.ambient = target;
  ledger.history.push_back(r);
  return ledger;
}

} // namespace bsurf
