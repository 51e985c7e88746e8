// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "bsurf/error.hpp"
#include "bsurf/fixtures.hpp"
#include "bsurf/homology.hpp"
#include "bsurf/matrix.hpp"
#include "bsurf/pi1.hpp"
#include "bsurf/reeb.hpp"
#include "bsurf/surfaces.hpp"
#include "bsurf/surgery.hpp"
#include "bsurf/target_map.hpp"
#include "bsurf/thm1.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace bsurf;

namespace {

constexpr std::uint32_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

std::vector<Vertex> shuffled(int n, std::mt19937& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

struct Host {
  std::string name;
  BranchedSurface surface;
};

std::vector<Host> thm1_hosts() {
  auto bary = [](const SimplicialComplex2& c) { return validate_branched_surface(barycentric_subdivide(c)); };
  return {{"sphere", bary(octahedron())},
          {"torus", bary(torus7())},
          {"genus-2", bary(make_surface(true, 2, 0).triangulation)},
          {"Klein bottle", bary(make_surface(false, 2, 0).triangulation)},
          {"capped K x S^1", validate_branched_surface(capped_sheet_bundle(6, 3).complex)},
          {"capped leg-swap bundle", validate_branched_surface(capped_sheet_bundle(6, 3, {0, 2, 1}).complex)}};
}

enum class PatchKind { Planar, Genus1, Mobius };

struct Instance {
  std::string label;
  AttachmentSpec spec;
  PatchKind patch = PatchKind::Planar;
};

// Seeded attachment instances: circles are links of vertices with disjoint
// stars away from the locus, so each bounds a disk in the manifold part.
std::vector<Instance> thm1_instances(int count) {
  std::mt19937 rng(kSeed);
  const auto hosts = thm1_hosts();
  std::vector<Instance> out;
  for (int trial = 0; static_cast<int>(out.size()) < count && trial < 10 * count; ++trial) {
    const Host& host = hosts[trial % hosts.size()];
    const int l = 1 + static_cast<int>(rng() % 3);
    const PatchKind kind = static_cast<PatchKind>(rng() % 3);
    std::set<Vertex> locus;
    for (const auto& c : host.surface.locus.circles) locus.insert(c.cycle.begin(), c.cycle.end());
    auto centers = separated_vertices(host.surface.complex, shuffled(host.surface.complex.vertex_count(), rng), l, locus);
    if (static_cast<int>(centers.size()) != l) continue;
    Instance inst;
    inst.patch = kind;
    inst.spec.host = host.surface;
    std::vector<int> lengths;
    for (Vertex v : centers) {
      inst.spec.circles.push_back(link_cycle(host.surface.complex, v));
      lengths.push_back(static_cast<int>(inst.spec.circles.back().size()));
      inst.spec.directions.push_back(rng() % 2 ? GlueDirection::Aligned : GlueDirection::Reversed);
    }
    const char* patch_name = kind == PatchKind::Planar ? "planar" : kind == PatchKind::Genus1 ? "genus-1" : "Mobius";
    inst.spec.patch = make_surface(kind != PatchKind::Mobius, kind == PatchKind::Planar ? 0 : 1, l, lengths);
    inst.label = host.name + ", l=" + std::to_string(l) + ", " + patch_name;
    out.push_back(std::move(inst));
  }
  return out;
}

struct Thm1Run {
  Instance instance;
  Coeff coeff;
  Thm1Report report;
};

std::vector<Thm1Run> run_thm1(const std::vector<Instance>& instances) {
  std::vector<Thm1Run> runs;
  for (const auto& inst : instances) {
    for (Coeff c : {Coeff::Integers, Coeff::Mod2}) {
      if (inst.patch == PatchKind::Mobius && c == Coeff::Integers) continue;
      runs.push_back({inst, c, check_thm1(inst.spec, c)});
    }
  }
  return runs;
}

std::string run_label(const Thm1Run& r) { return r.instance.label + " over " + coeff_name(r.coeff); }

bool item_matches(const Thm1Report& rep, const char* name) {
  const Thm1Item* it = rep.find(name);
  return it && it->verdict == Verdict::Match;
}

Outcome criterion_thm1(const std::vector<Thm1Run>& runs, int instances) {
  Outcome o;
  int h2_checked = 0;
  for (const auto& r : runs) {
    const auto& rep = r.report;
    require(o, rep.hypotheses_hold(), run_label(r) + ": hypotheses fail");
    for (const char* name : {"H1", "H2", "H^1"}) require(o, item_matches(rep, name), run_label(r) + ": " + name);
    if (rep.prediction && rep.prediction->ch2) {
      require(o, item_matches(rep, "H^2"), run_label(r) + ": H^2");
      ++h2_checked;
    }
  }
  require(o, instances >= 25, "only " + std::to_string(instances) + " instances");
  if (o.pass) {
    o.detail = std::to_string(instances) + " instances, " + std::to_string(runs.size()) +
               " coefficient runs, H^2 compared on " + std::to_string(h2_checked);
  }
  return o;
}

Outcome criterion_euler(const std::vector<Instance>& instances) {
  Outcome o;
  int checked = 0;
  for (const auto& inst : instances) {
    AttachmentResult r = attach_surface(inst.spec);
    const int lhs = euler_characteristic(r.surface.complex);
    const int rhs = euler_characteristic(inst.spec.host.complex) + euler_characteristic(inst.spec.patch.triangulation);
    require(o, lhs == rhs, inst.label + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " surgery outputs";
  return o;
}

Outcome criterion_branch() {
  Outcome o;
  auto k = validate_branched_surface(tripod_bundle(4).complex);
  require(o, k.locus.count(CircleKind::Tripod) == 1 && k.locus.count(CircleKind::Collar) == 3,
          "K x S^1 inventory");
  auto s = validate_branched_surface(leg_swap_bundle(4).complex);
  require(o, !s.normal, "leg swap should be non-normal");
  try {
    validate_branched_surface(leg_cycle_bundle(4).complex);
    require(o, false, "3-cycle bundle accepted");
  } catch (const Error& e) {
    require(o, e.code() == ErrorCode::IllegalMonodromy, "3-cycle bundle: " + std::string(e.what()));
  }
  try {
    validate_branched_surface(build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}}, 6));
    require(o, false, "edge in four triangles accepted");
  } catch (const Error& e) {
    require(o, e.code() == ErrorCode::NotABranchedSurface, "edge in four triangles: " + std::string(e.what()));
  }
  if (o.pass) o.detail = "1 tripod + 3 collars; leg swap non-normal; 3-cycle and 4-sheet edge rejected";
  return o;
}

Outcome criterion_pi1(const std::vector<Instance>& instances) {
  Outcome o;
  std::vector<std::pair<std::string, SimplicialComplex2>> fixtures = {
      {"tetrahedron", tetrahedron_boundary()},
      {"octahedron", octahedron()},
      {"torus", torus7()},
      {"projective plane", projective_plane6()},
      {"Klein bottle", make_surface(false, 2, 0).triangulation},
      {"genus-2", make_surface(true, 2, 0).triangulation},
      {"K x S^1", tripod_bundle(4).complex},
      {"leg swap", leg_swap_bundle(4).complex},
      {"capped K x S^1", capped_sheet_bundle(6, 3).complex},
      {"open book", open_book()}};
  int checked = 0;
  auto agree = [&](const std::string& name, const SimplicialComplex2& c) {
    require(o, abelianization(edge_path_presentation(c)) == homology(c, Coeff::Integers).degree[1],
            name + ": abelianization differs from H1");
    ++checked;
  };
  for (const auto& [name, c] : fixtures) agree(name, c);
  for (const auto& inst : instances) agree(inst.label, attach_surface(inst.spec).surface.complex);

  std::mt19937 rng(kSeed + 4);
  int bubbles = 0;
  for (const auto& host : {validate_branched_surface(barycentric_subdivide(octahedron())),
                           validate_branched_surface(barycentric_subdivide(tetrahedron_boundary()))}) {
    for (int trial = 0; trial < 3; ++trial) {
      auto centers = separated_vertices(host.complex, shuffled(host.complex.vertex_count(), rng), 2);
      if (centers.size() != 2) continue;
      std::vector<std::vector<Triangle>> disks;
      for (Vertex v : centers) disks.push_back(vertex_star(host.complex, v));
      auto rep = check_thm1(bubble_spec(host, disks), Coeff::Integers);
      require(o, rep.simplified_pi1 == "< x1 | >", "bubble l=2 simplified to " + rep.simplified_pi1);
      ++bubbles;
    }
  }
  require(o, bubbles > 0, "no l=2 bubble instances");
  if (o.pass) {
    o.detail = std::to_string(checked) + " complexes; " + std::to_string(bubbles) + " l=2 bubbles give < x1 | >";
  }
  return o;
}

Outcome criterion_cup(const std::vector<Thm1Run>& runs) {
  Outcome o;
  int checked = 0;
  for (const auto& r : runs) {
    if (r.coeff != Coeff::Mod2) continue;
    require(o, item_matches(r.report, "cup vanishing (Z/2)"), run_label(r) + ": cup products");
    ++checked;
  }
  const bool control = !cup_product_h1(torus7(), Coeff::Mod2).all_zero();
  require(o, control, "torus control product vanished");
  if (o.pass) o.detail = std::to_string(checked) + " Z/2 instances vanish; torus control nonzero";
  return o;
}

Outcome criterion_heegaard() {
  Outcome o;
  const int table[3][3] = {{0, 3, 2}, {2, 1, 2}, {1, 2, 2}};
  int rows = 0;
  for (auto [ambient, target] : {std::pair{Orientability::Orientable, Orientability::Orientable},
                                 std::pair{Orientability::Orientable, Orientability::NonOrientable},
                                 std::pair{Orientability::NonOrientable, Orientability::NonOrientable}}) {
    for (const auto& row : table) {
      HeegaardLedger ledger;
      ledger.genus_bound = row[0];
      ledger.ambient = ambient;
      auto after = apply_heegaard(ledger, row[1], target);
      require(o, after.genus_bound == row[2] && after.ambient == target && after.history.size() == 1,
              "(" + std::to_string(row[0]) + "," + std::to_string(row[1]) + ") " + orientability_name(target));
      ++rows;
    }
  }
  if (o.pass) o.detail = std::to_string(rows) + " ledger rows, orientable and non-orientable targets";
  return o;
}

Outcome criterion_reeb() {
  Outcome o;
  std::mt19937 rng(kSeed + 7);
  const std::vector<std::pair<std::string, SimplicialComplex2>> surfaces = {
      {"sphere", octahedron()},
      {"sphere", barycentric_subdivide(octahedron())},
      {"torus", torus7()},
      {"torus", barycentric_subdivide(torus7())},
      {"genus-2", make_surface(true, 2, 0).triangulation}};
  int instances = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const auto& [name, s] = surfaces[trial % surfaces.size()];
    std::vector<int> p(s.vertex_count());
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<Rational> values;
    for (int x : p) values.emplace_back(x, 3);
    auto g = reeb_graph(s, values);
    require(o, reeb_isomorphic(g, reeb_graph_by_slices(s, values)), name + " trial " + std::to_string(trial));
    if (name == "sphere") require(o, reeb_betti1(g) == 0, "sphere Betti number");
    ++instances;
  }
  std::vector<Rational> height;
  for (int i = 0; i < 7; ++i) height.emplace_back(i);
  require(o, reeb_betti1(reeb_graph(torus7(), height)) == 1, "torus height Betti number");
  if (o.pass) o.detail = std::to_string(instances) + " random heights agree; torus height Betti 1";
  return o;
}

Outcome criterion_snf() {
  Outcome o;
  std::mt19937 rng(kSeed + 8);
  int count = 0;
  for (; count < 240; ++count) {
    const int rows = 1 + static_cast<int>(rng() % 12);
    const int cols = 1 + static_cast<int>(rng() % 12);
    BigMatrix m(rows, cols);
    const int zero_bias = static_cast<int>(rng() % 3);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const int x = static_cast<int>(rng() % 19) - 9;
        m(r, c) = (zero_bias && rng() % 3 == 0) ? 0 : x;
      }
    }
    BigSmithForm s = smith_normal_form(m);
    const std::string tag = "matrix " + std::to_string(count);
    require(o, s.u * m * s.v == s.d, tag + ": U M V != D");
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (r != c) require(o, s.d(r, c) == 0, tag + ": off-diagonal entry");
      }
    }
    auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) require(o, diag[i + 1] % diag[i] == 0, tag + ": divisibility");
    const BigInt du = abs(determinant(s.u));
    const BigInt dv = abs(determinant(s.v));
    require(o, du == 1 && dv == 1, tag + ": transform not unimodular");
  }
  if (o.pass) o.detail = std::to_string(count) + " random matrices";
  return o;
}

Outcome criterion_local_models() {
  Outcome o;
  auto kxs1 = tripod_bundle(4);
  auto proj = build_target_map(validate_branched_surface(kxs1.complex), ring_annulus(4, 5), bundle_projection(kxs1, 5));
  auto r1 = validate_local_models(proj);
  require(o, r1.verdict == LocalModelVerdict::BornFromSSNS, "K x S^1 projection: " + r1.reason);
  require(o, r1.count(VertexModelKind::Tripod) > 0 && r1.tripods_split_one_two(), "side pattern (1|2)");
  auto swap = leg_swap_bundle(4);
  auto twisted = build_target_map(validate_branched_surface(swap.complex), ring_annulus(4, 5), bundle_projection(swap, 5));
  require(o, validate_local_models(twisted).verdict == LocalModelVerdict::LocallyBornOnly, "twisted bundle");
  auto oct = validate_branched_surface(octahedron());
  auto fold = build_target_map(oct, octahedron(), {0, 1, 2, 3, 4, 0});
  require(o, validate_local_models(fold).verdict == LocalModelVerdict::Fail, "fold not rejected");
  if (o.pass) o.detail = "BornFromSSNS with (1|2) at 4 tripod vertices; LocallyBornOnly; Fail";
  return o;
}

} // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& name, auto&& run) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << o.detail << " (" << s << " s)";
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
  };

  std::cout << "seed " << kSeed << std::endl;
  const auto instances = thm1_instances(30);
  std::vector<Thm1Run> runs;
  report(1, "attachment homology and cohomology", [&] {
    runs = run_thm1(instances);
    return criterion_thm1(runs, static_cast<int>(instances.size()));
  });
  report(2, "euler additivity", [&] { return criterion_euler(instances); });
  report(3, "branch structure validation", [&] { return criterion_branch(); });
  report(4, "pi1 consistency", [&] { return criterion_pi1(instances); });
  report(5, "cup product vanishing over Z/2", [&] { return criterion_cup(runs); });
  report(6, "heegaard ledger", [&] { return criterion_heegaard(); });
  report(7, "reeb oracle equivalence", [&] { return criterion_reeb(); });
  report(8, "smith normal form contract", [&] { return criterion_snf(); });
  report(9, "local model validation", [&] { return criterion_local_models(); });
  return failures == 0 ? 0 : 1;
}
