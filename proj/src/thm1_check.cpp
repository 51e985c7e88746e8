#include "bsurf/thm1.hpp"

#include "bsurf/error.hpp"
#include "bsurf/pi1.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bsurf {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Fail: return "FAIL";
    case Verdict::NoPrediction: return "NO PREDICTION";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

Int reduce(Int x, Coeff coeff) {
  if (coeff != Coeff::Mod2) return x;
  x %= 2;
  return x < 0 ? x + 2 : x;
}

// Cochain or chain on the edges of `src` carried along an injective simplicial
// vertex map into `dst`; edges outside the image get 0.
std::vector<Int> transport_edges(const SimplicialComplex2& src, std::span<const Int> values,
                                 std::span<const Vertex> map, const SimplicialComplex2& dst) {
  std::vector<Int> out(dst.edge_count(), 0);
  for (int e = 0; e < src.edge_count(); ++e) {
    if (values[e] == 0) continue;
    const Vertex a = map[src.edges()[e][0]];
    const Vertex b = map[src.edges()[e][1]];
    auto idx = dst.edge_index(a, b);
    if (!idx) throw std::logic_error("edge has no image");
    out[*idx] += a < b ? values[e] : -values[e];
  }
  return out;
}

// Shortest path from some source to some target, sources tried in ascending
// order and neighbors visited in ascending order.
std::vector<Vertex> bfs_path(const SimplicialComplex2& c, std::vector<Vertex> sources, const std::set<Vertex>& targets) {
  std::sort(sources.begin(), sources.end());
  std::vector<Vertex> parent(c.vertex_count(), -2);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    parent[s] = -1;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (targets.count(v)) {
      std::vector<Vertex> path;
      for (Vertex x = v; x >= 0; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex w : c.neighbors(v)) {
      if (parent[w] != -2) continue;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return {};
}

IntMatrix columns_matrix(const std::vector<std::vector<Int>>& cols, const std::vector<int>& keep) {
  IntMatrix m(static_cast<int>(keep.size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    for (int r = 0; r < m.rows(); ++r) m(r, c) = cols[c][keep[r]];
  }
  return m;
}

std::vector<int> free_rows(const HomologyBasis& basis) {
  std::vector<int> rows;
  for (int i = 0; i < basis.size(); ++i) {
    if (basis.orders()[i] == 0) rows.push_back(i);
  }
  return rows;
}

Domain domain_of(Coeff coeff) { return coeff == Coeff::Mod2 ? Domain::Gf2 : Domain::Integers; }

// Rank of class coordinates on the free generators.
int class_rank(const HomologyBasis& basis, const std::vector<std::vector<Int>>& coords) {
  if (coords.empty()) return 0;
  return matrix_rank(columns_matrix(coords, free_rows(basis)), domain_of(basis.coeff()));
}

// The classes generate the whole group.
bool spans(const HomologyBasis& basis, const std::vector<std::vector<Int>>& coords) {
  const int n = basis.size();
  if (n == 0) return true;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  IntMatrix m = columns_matrix(coords, all);
  if (basis.coeff() != Coeff::Integers) return matrix_rank(m, domain_of(basis.coeff())) == n;
  IntMatrix rel(n, n);
  for (int i = 0; i < n; ++i) rel(i, i) = basis.orders()[i];
  auto factors = invariant_factors(m.hcat(rel));
  return static_cast<int>(factors.size()) == n &&
         std::all_of(factors.begin(), factors.end(), [](Int d) { return d == 1; });
}

int gf2_rank(const std::vector<std::vector<Int>>& cols, int rows) {
  if (cols.empty() || rows == 0) return 0;
  std::vector<int> all(rows);
  for (int i = 0; i < rows; ++i) all[i] = i;
  return matrix_rank(columns_matrix(cols, all), Domain::Gf2);
}

// Some linear map over Z/2 sends each `from` column to the matching `to`
// column, and it is injective on the span of `from`.
bool injective_correspondence(const std::vector<std::vector<Int>>& from, int from_rows,
                              const std::vector<std::vector<Int>>& to, int to_rows) {
  std::vector<std::vector<Int>> stacked;
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto col = from[i];
    col.insert(col.end(), to[i].begin(), to[i].end());
    stacked.push_back(std::move(col));
  }
  const int r = gf2_rank(stacked, from_rows + to_rows);
  return gf2_rank(from, from_rows) == r && gf2_rank(to, to_rows) == r;
}

bool is_zero_vector(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// Extends a host 1-cocycle over the patch: on each circle it is the
// coboundary of a function which is then extended by zero inside the patch.
std::optional<std::vector<Int>> extend_host_cocycle(const AttachmentResult& r, std::span<const Int> phi) {
  const SimplicialComplex2& host = r.host.complex;
  const SimplicialComplex2& pc = r.surface.complex;
  std::vector<Int> h(pc.vertex_count(), 0);
  for (const auto& circle : r.circles) {
    const int n = static_cast<int>(circle.size());
    Int acc = 0;
    for (int k = 0; k < n; ++k) {
      h[circle[k]] = acc;
      const Vertex a = circle[k];
      const Vertex b = circle[(k + 1) % n];
      const Int value = phi[*host.edge_index(a, b)];
      acc = reduce(acc + (a < b ? value : -value), Coeff::Mod2);
    }
    if (acc != 0) return std::nullopt;
  }
  std::vector<Int> out(pc.edge_count(), 0);
  const int hv = host.vertex_count();
  for (int e = 0; e < pc.edge_count(); ++e) {
    auto [a, b] = pc.edges()[e];
    if (b < hv) {
      auto idx = host.edge_index(a, b);
      if (!idx) throw std::logic_error("host edge missing");
      out[e] = phi[*idx];
    } else {
      out[e] = reduce(h[b] - h[a], Coeff::Mod2);
    }
  }
  return out;
}

// Moves a 1-cocycle of the capped-off patch away from the caps and carries it
// into the attached surface, extended by zero.
std::vector<Int> transport_patch_cocycle(const AttachmentResult& r, const SimplicialComplex2& closed,
                                         std::span<const Int> psi) {
  const SimplicialComplex2& patch = r.patch.triangulation;
  const int pv = patch.vertex_count();
  std::vector<Int> h(pv, 0);
  for (int i = 0; i < static_cast<int>(r.patch.boundaries.size()); ++i) {
    const Vertex apex = pv + i;
    for (Vertex v : r.patch.boundaries[i]) h[v] = -psi[*closed.edge_index(v, apex)];
  }
  std::vector<Int> local(patch.edge_count(), 0);
  for (int e = 0; e < patch.edge_count(); ++e) {
    auto [a, b] = patch.edges()[e];
    local[e] = reduce(psi[*closed.edge_index(a, b)] - (h[b] - h[a]), Coeff::Mod2);
  }
  auto out = transport_edges(patch, local, r.patch_to_result, r.surface.complex);
  for (auto& x : out) x = reduce(x, Coeff::Mod2);
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::optional<std::vector<Triangle>> spanning_disk(const BranchedSurface& surface, const std::vector<Vertex>& loop) {
  const SimplicialComplex2& c = surface.complex;
  if (!is_simple_edge_loop(c, loop)) return std::nullopt;
  std::set<int> cut;
  for (std::size_t k = 0; k < loop.size(); ++k) cut.insert(*c.edge_index(loop[k], loop[(k + 1) % loop.size()]));
  const int first = *cut.begin();
  for (int start : c.edge_triangles(first)) {
    std::vector<bool> seen(c.triangle_count(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    std::vector<Triangle> side;
    bool ok = true;
    while (!stack.empty() && ok) {
      int t = stack.back();
      stack.pop_back();
      const Triangle& tri = c.triangles()[t];
      side.push_back(tri);
      for (Vertex v : tri) {
        if (surface.locus.contains_vertex(v)) ok = false;
      }
      for (int a = 0; a < 3 && ok; ++a) {
        for (int b = a + 1; b < 3; ++b) {
          int e = *c.edge_index(tri[a], tri[b]);
          if (cut.count(e)) continue;
          if (c.edge_degree(e) != 2) {
            ok = false;
            break;
          }
          for (int u : c.edge_triangles(e)) {
            if (!seen[u]) {
              seen[u] = true;
              stack.push_back(u);
            }
          }
        }
      }
    }
    if (!ok) continue;
    auto boundary = disk_boundary(c, side);
    if (boundary && same_cycle(*boundary, loop)) {
      std::sort(side.begin(), side.end());
      return side;
    }
  }
  return std::nullopt;
}

Thm1Generators thm1_generators(const AttachmentResult& r) {
  const SimplicialComplex2& host = r.host.complex;
  const SimplicialComplex2& patch = r.patch.triangulation;
  const SimplicialComplex2& pc = r.surface.complex;
  const int l = static_cast<int>(r.circles.size());
  std::map<Vertex, Vertex> preimage; // circle vertex -> patch boundary vertex
  for (const auto& boundary : r.patch.boundaries) {
    for (Vertex v : boundary) preimage[r.patch_to_result[v]] = v;
  }
  Thm1Generators out;
  const std::set<Vertex> base(r.circles[0].begin(), r.circles[0].end());
  for (int j = 1; j < l; ++j) {
    auto host_path = bfs_path(host, r.circles[j], base);
    if (host_path.empty()) throw Error(ErrorCode::NotConnected, "no host path between circles");
    const Vertex y = host_path.front();
    const Vertex x = host_path.back();
    auto patch_path = bfs_path(patch, {preimage.at(x)}, {preimage.at(y)});
    if (patch_path.empty()) throw Error(ErrorCode::NotConnected, "patch is not connected");
    std::vector<Vertex> loop;
    for (Vertex v : patch_path) loop.push_back(r.patch_to_result[v]);
    loop.insert(loop.end(), host_path.begin() + 1, host_path.end() - 1);
    out.bridges.push_back(loop_chain(pc, loop));
    out.bridge_loops.push_back(std::move(loop));
  }
  // Dual j is the coboundary of the indicator of host vertices, kept only on
  // edges between circle j and the patch interior.
  const int hv = host.vertex_count();
  for (int j = 1; j < l; ++j) {
    const std::set<Vertex> circle(r.circles[j].begin(), r.circles[j].end());
    std::vector<Int> dual(pc.edge_count(), 0);
    for (int e = 0; e < pc.edge_count(); ++e) {
      auto [a, b] = pc.edges()[e];
      if (circle.count(a) && b >= hv) dual[e] = -1;
    }
    out.bridge_duals.push_back(std::move(dual));
  }
  return out;
}

bool Thm1Report::hypotheses_hold() const { return failed_hypotheses().empty(); }

std::vector<std::string> Thm1Report::failed_hypotheses() const {
  std::vector<std::string> out;
  if (!host_connected) out.push_back("host connected");
  for (std::size_t j = 0; j < null_homologous.size(); ++j) {
    if (!null_homologous[j]) out.push_back("circle " + std::to_string(j) + " null-homologous");
  }
  if (!patch_orientable && coeff != Coeff::Mod2) out.push_back("patch orientable");
  return out;
}

const Thm1Item* Thm1Report::find(const std::string& name) const {
  for (const auto& item : items) {
    if (item.name == name) return &item;
  }
  return nullptr;
}

bool Thm1Report::all_match() const {
  return std::none_of(items.begin(), items.end(), [](const Thm1Item& i) { return i.verdict == Verdict::Fail; });
}

std::string Thm1Report::to_string() const {
  std::ostringstream os;
  os << "coefficients: " << coeff_name(coeff) << "\n";
  os << "circles: " << l << "\n";
  os << "hypothesis host connected: " << yes_no(host_connected) << "\n";
  for (std::size_t j = 0; j < null_homologous.size(); ++j) {
    os << "hypothesis circle " << j << " null-homologous: " << yes_no(null_homologous[j]) << "\n";
    os << "circle " << j << " bounds an embedded disk: " << yes_no(bounds_disk[j]) << "\n";
  }
  os << "hypothesis patch orientable: " << yes_no(patch_orientable)
     << (coeff == Coeff::Mod2 ? " (not required over Z/2)" : "") << "\n";
  os << "normal: " << yes_no(normal) << "\n";
  os << "host homology: " << host_homology.to_string() << "\n";
  os << "homology: " << homology.to_string() << "\n";
  os << "cohomology: H^1 = " << cohomology.degree[1].to_string(coeff)
     << ", H^2 = " << cohomology.degree[2].to_string(coeff) << "\n";
  if (prediction) {
    os << "predicted: H1 = " << prediction->h1.to_string(coeff) << ", H2 = " << prediction->h2.to_string(coeff)
       << ", H^1 = " << prediction->ch1.to_string(coeff)
       << ", H^2 = " << (prediction->ch2 ? prediction->ch2->to_string(coeff) : "not predicted") << "\n";
  } else {
    os << "predicted: none (hypotheses fail)\n";
  }
  if (!simplified_pi1.empty()) os << "pi1: " << simplified_pi1 << "\n";
  for (const auto& item : items) os << "[" << verdict_name(item.verdict) << "] " << item.name << ": " << item.detail << "\n";
  return os.str();
}

Thm1Report check_thm1(const AttachmentSpec& spec, Coeff coeff) {
  const AttachmentResult r = attach_surface(spec);
  const SimplicialComplex2& host = r.host.complex;
  const SimplicialComplex2& pc = r.surface.complex;
  const int l = static_cast<int>(r.circles.size());

  Thm1Report rep;
  rep.coeff = coeff;
  rep.l = l;
  rep.host_connected = connected_components(host).size() == 1;
  bool null_mod2 = true;
  for (const auto& circle : r.circles) {
    rep.null_homologous.push_back(is_null_homologous(host, circle, coeff));
    rep.bounds_disk.push_back(spanning_disk(r.host, circle).has_value());
    null_mod2 = null_mod2 && is_null_homologous(host, circle, Coeff::Mod2);
  }
  rep.patch_orientable = r.patch.orientable;
  rep.normal = r.surface.normal;
  rep.host_euler = euler_characteristic(host);
  rep.patch_euler = euler_characteristic(r.patch.triangulation);
  rep.euler = euler_characteristic(pc);
  rep.host_homology = homology(host, coeff);
  rep.host_cohomology = cohomology(host, coeff);
  rep.homology = homology(pc, coeff);
  const HomologyBasis ch1 = cohomology_h1_basis(pc, coeff);
  const HomologyBasis ch2 = cohomology_h2_basis(pc, coeff);
  rep.cohomology = cohomology(pc, coeff);
  rep.cohomology.degree[1] = ch1.group();
  rep.cohomology.degree[2] = ch2.group();

  auto add = [&](std::string name, Verdict v, std::string detail) {
    rep.items.push_back({std::move(name), v, std::move(detail)});
  };
  auto compare = [&](const std::string& name, const AbelianGroup& computed, const AbelianGroup& predicted) {
    add(name, computed == predicted ? Verdict::Match : Verdict::Fail,
        "computed " + computed.to_string(coeff) + ", predicted " + predicted.to_string(coeff));
  };

  add("euler characteristic", rep.euler == rep.host_euler + rep.patch_euler ? Verdict::Match : Verdict::Fail,
      std::to_string(rep.euler) + " = " + std::to_string(rep.host_euler) + " + " + std::to_string(rep.patch_euler));

  int new_tripods = 0;
  for (const auto& circle : r.circles) {
    for (const auto& bc : r.surface.locus.circles) {
      if (bc.kind == CircleKind::Tripod && same_cycle(bc.cycle, circle)) ++new_tripods;
    }
  }
  const int before = static_cast<int>(r.host.locus.circles.size());
  const int after = static_cast<int>(r.surface.locus.circles.size());
  add("branch circles", after == before + l && new_tripods == l ? Verdict::Match : Verdict::Fail,
      std::to_string(after) + " = " + std::to_string(before) + " + " + std::to_string(l) + ", " +
          std::to_string(new_tripods) + " new tripod circles");

  const bool hyp = rep.hypotheses_hold();
  const std::string no_hyp = "hypotheses fail";
  if (hyp) {
    rep.prediction = predict_thm1(rep.host_homology, rep.host_cohomology, l, r.patch.orientable, r.patch.genus);
    const auto& p = *rep.prediction;
    compare("H1", rep.homology.degree[1], p.h1);
    compare("H2", rep.homology.degree[2], p.h2);
    compare("H^1", rep.cohomology.degree[1], p.ch1);
    if (p.ch2) {
      compare("H^2", rep.cohomology.degree[2], *p.ch2);
    } else {
      add("H^2", Verdict::NoPrediction, "predicted H1 is not free");
    }
  } else {
    for (const char* name : {"H1", "H2", "H^1", "H^2"}) add(name, Verdict::NoPrediction, no_hyp);
  }

  Thm1Generators gens;
  std::string gen_error;
  if (rep.host_connected) {
    try {
      gens = thm1_generators(r);
    } catch (const Error& e) {
      gen_error = e.what();
    }
  }

  // Generators: host classes, patch classes and bridges.
  if (hyp && gen_error.empty()) {
    const HomologyBasis b = h1_basis(pc, coeff);
    const HomologyBasis hb = h1_basis(host, coeff);
    const HomologyBasis pb = h1_basis(r.patch.triangulation, coeff);
    std::vector<Vertex> identity(host.vertex_count());
    for (Vertex v = 0; v < host.vertex_count(); ++v) identity[v] = v;
    std::vector<std::vector<Int>> host_cols, patch_cols, bridge_cols;
    for (int i = 0; i < hb.size(); ++i) {
      host_cols.push_back(b.coordinates(transport_edges(host, hb.representative(i), identity, pc)));
    }
    for (int i = 0; i < pb.size(); ++i) {
      patch_cols.push_back(b.coordinates(transport_edges(r.patch.triangulation, pb.representative(i), r.patch_to_result, pc)));
    }
    for (const auto& z : gens.bridges) bridge_cols.push_back(b.coordinates(z));
    auto all = host_cols;
    all.insert(all.end(), patch_cols.begin(), patch_cols.end());
    const int without = class_rank(b, all);
    all.insert(all.end(), bridge_cols.begin(), bridge_cols.end());
    const AbelianGroup closed_h1 = reference_h1_closed(r.patch.orientable, r.patch.genus, coeff);
    const bool span_ok = spans(b, all);
    const int host_rank = class_rank(b, host_cols);
    const int patch_rank = class_rank(b, patch_cols);
    const int bridge_rank = class_rank(b, all) - without;
    const int closed_rank = coeff == Coeff::Mod2 ? closed_h1.rank + static_cast<int>(closed_h1.torsion.size()) : closed_h1.rank;
    const bool ok = span_ok && host_rank == rep.host_homology.degree[1].rank && patch_rank == closed_rank &&
                    bridge_rank == l - 1;
    add("H1 generators", ok ? Verdict::Match : Verdict::Fail,
        std::string("span ") + (span_ok ? "yes" : "no") + ", host rank " + std::to_string(host_rank) +
            ", patch rank " + std::to_string(patch_rank) + ", bridge rank " + std::to_string(bridge_rank));

    bool pairing_ok = true;
    for (int i = 0; i + 1 < l; ++i) {
      for (int j = 0; j + 1 < l; ++j) {
        Int v = reduce(pair(gens.bridge_duals[i], gens.bridges[j], coeff), coeff);
        if (v != (i == j ? 1 : 0)) pairing_ok = false;
      }
      if (!ch1.is_cycle(gens.bridge_duals[i])) pairing_ok = false;
    }
    add("bridge pairing", pairing_ok ? Verdict::Match : Verdict::Fail,
        std::to_string(l - 1) + " bridge cycles against their dual cocycles");
  } else {
    const std::string why = hyp ? gen_error : no_hyp;
    add("H1 generators", Verdict::NoPrediction, why);
    add("bridge pairing", Verdict::NoPrediction, why);
  }

  // Cup products over Z/2 on the constructed cocycles.
  if (rep.host_connected && null_mod2 && gen_error.empty()) {
    const HomologyBasis c1 = cohomology_h1_basis(pc, Coeff::Mod2);
    const HomologyBasis c2 = cohomology_h2_basis(pc, Coeff::Mod2);
    auto cup_class = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
      return c2.coordinates(cup_cochains(pc, a, b, Coeff::Mod2));
    };
    const CompactSurfaceModel closed = close_up(r.patch);
    const SimplicialComplex2& s0 = closed.triangulation;
    const HomologyBasis s1 = cohomology_h1_basis(s0, Coeff::Mod2);
    const HomologyBasis s2 = cohomology_h2_basis(s0, Coeff::Mod2);
    std::vector<std::vector<Int>> patch_duals;
    for (int i = 0; i < s1.size(); ++i) patch_duals.push_back(transport_patch_cocycle(r, s0, s1.representative(i)));
    std::vector<std::vector<Int>> bridge_duals;
    for (const auto& d : gens.bridge_duals) {
      std::vector<Int> m(d.size());
      for (std::size_t k = 0; k < d.size(); ++k) m[k] = reduce(d[k], Coeff::Mod2);
      bridge_duals.push_back(std::move(m));
    }
    bool cocycles = true;
    for (const auto& x : patch_duals) cocycles = cocycles && c1.is_cycle(x);
    for (const auto& x : bridge_duals) cocycles = cocycles && c1.is_cycle(x);

    int products = 0;
    bool vanish = cocycles;
    for (const auto& beta : bridge_duals) {
      std::vector<const std::vector<Int>*> others;
      for (const auto& x : patch_duals) others.push_back(&x);
      for (const auto& x : bridge_duals) others.push_back(&x);
      for (const auto* x : others) {
        vanish = vanish && is_zero_vector(cup_class(*x, beta)) && is_zero_vector(cup_class(beta, *x));
        products += 2;
      }
    }
    add("cup vanishing (Z/2)", vanish ? Verdict::Match : Verdict::Fail,
        std::to_string(products) + " products of bridge duals are zero" + (cocycles ? "" : "; a dual is not a cocycle"));

    // Host classes: products in the host against products in the result.
    const HomologyBasis h1c = cohomology_h1_basis(host, Coeff::Mod2);
    const HomologyBasis h2c = cohomology_h2_basis(host, Coeff::Mod2);
    std::vector<std::vector<Int>> ext;
    bool extend_ok = true;
    for (int i = 0; i < h1c.size() && extend_ok; ++i) {
      auto e = extend_host_cocycle(r, h1c.representative(i));
      if (!e || !c1.is_cycle(*e)) extend_ok = false;
      else ext.push_back(std::move(*e));
    }
    if (extend_ok) {
      std::vector<std::vector<Int>> deg1;
      for (const auto& e : ext) deg1.push_back(c1.coordinates(e));
      std::vector<std::vector<Int>> from, to;
      for (int i = 0; i < h1c.size(); ++i) {
        for (int j = 0; j < h1c.size(); ++j) {
          from.push_back(h2c.coordinates(cup_cochains(host, h1c.representative(i), h1c.representative(j), Coeff::Mod2)));
          to.push_back(cup_class(ext[i], ext[j]));
        }
      }
      const bool ok = gf2_rank(deg1, c1.size()) == h1c.size() && injective_correspondence(from, h2c.size(), to, c2.size());
      add("host subring (Z/2)", ok ? Verdict::Match : Verdict::Fail,
          std::to_string(h1c.size()) + " host classes, " + std::to_string(from.size()) + " products compared");
    } else {
      add("host subring (Z/2)", Verdict::Fail, "a host cocycle does not extend");
    }

    std::vector<std::vector<Int>> deg1, from, to;
    for (const auto& x : patch_duals) deg1.push_back(c1.coordinates(x));
    for (int i = 0; i < s1.size(); ++i) {
      for (int j = 0; j < s1.size(); ++j) {
        from.push_back(s2.coordinates(cup_cochains(s0, s1.representative(i), s1.representative(j), Coeff::Mod2)));
        to.push_back(cup_class(patch_duals[i], patch_duals[j]));
      }
    }
    const bool ok = cocycles && gf2_rank(deg1, c1.size()) == s1.size() &&
                    injective_correspondence(from, s2.size(), to, c2.size());
    int nonzero = 0;
    for (const auto& v : to) nonzero += is_zero_vector(v) ? 0 : 1;
    add("closed patch subring (Z/2)", ok ? Verdict::Match : Verdict::Fail,
        std::to_string(s1.size()) + " patch classes, " + std::to_string(nonzero) + " nonzero products");
  } else {
    for (const char* name : {"cup vanishing (Z/2)", "host subring (Z/2)", "closed patch subring (Z/2)"}) {
      add(name, Verdict::NoPrediction, gen_error.empty() ? "hypotheses fail over Z/2" : gen_error);
    }
  }

  // Fundamental group.
  if (connected_components(pc).size() == 1) {
    const GroupPresentation presentation = edge_path_presentation(pc);
    const GroupPresentation simplified = tietze_simplify(presentation, default_tietze_budget(presentation));
    rep.simplified_pi1 = simplified.to_string();
    const AbelianGroup h1z = coeff == Coeff::Integers ? rep.homology.degree[1] : homology(pc, Coeff::Integers).degree[1];
    const AbelianGroup ab = abelianization(simplified);
    add("pi1 abelianization", ab == h1z ? Verdict::Match : Verdict::Fail,
        "abelianized " + ab.to_string(Coeff::Integers) + ", H1 " + h1z.to_string(Coeff::Integers));
    const bool certified = rep.host_connected && std::all_of(rep.bounds_disk.begin(), rep.bounds_disk.end(), [](bool b) { return b; });
    if (certified) {
      const AbelianGroup expected = abelianization(edge_path_presentation(host))
                                        .direct_sum(ring_module(l - 1))
                                        .direct_sum(reference_h1_closed(r.patch.orientable, r.patch.genus, Coeff::Integers));
      add("pi1 free product", ab == expected ? Verdict::Match : Verdict::Fail,
          "abelianized " + ab.to_string(Coeff::Integers) + ", expected " + expected.to_string(Coeff::Integers));
    } else {
      add("pi1 free product", Verdict::Inconclusive, "null-homotopy of the circles not certified by disks");
    }
  } else {
    add("pi1 abelianization", Verdict::Inconclusive, "result is not connected");
    add("pi1 free product", Verdict::Inconclusive, "result is not connected");
  }
  return rep;
}

} // namespace bsurf
