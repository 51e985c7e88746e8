#include "doctest.h"

#include "bsurf/error.hpp"
#include "bsurf/fixtures.hpp"
#include "bsurf/pi1.hpp"
#include "bsurf/surgery.hpp"
#include "bsurf/thm1.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

using namespace bsurf;

namespace {

BranchedSurface sphere_host() { return validate_branched_surface(barycentric_subdivide(octahedron())); }

std::vector<Vertex> shuffled_vertices(const SimplicialComplex2& c, std::mt19937& rng) {
  std::vector<Vertex> order(c.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

std::vector<std::vector<Triangle>> star_disks(const SimplicialComplex2& c, const std::vector<Vertex>& centers) {
  std::vector<std::vector<Triangle>> disks;
  for (Vertex v : centers) disks.push_back(vertex_star(c, v));
  return disks;
}

// Boundary-free 3-cycle of interior vertices whose class is nonzero.
std::vector<Vertex> essential_triangle_loop(const BranchedSurface& s) {
  const auto& c = s.complex;
  for (Vertex a = 0; a < c.vertex_count(); ++a) {
    for (Vertex b : c.neighbors(a)) {
      for (Vertex d : c.neighbors(b)) {
        if (a >= b || b >= d || !c.edge_index(a, d)) continue;
        std::vector<Vertex> loop{a, b, d};
        if (std::any_of(loop.begin(), loop.end(), [&](Vertex v) { return s.locus.contains_vertex(v); })) continue;
        if (!is_null_homologous(c, loop, Coeff::Integers)) return loop;
      }
    }
  }
  return {};
}

// Independent two-sidedness test: the triangles around the loop admit a
// coherent orientation.
bool two_sided(const SimplicialComplex2& c, const std::vector<Vertex>& loop) {
  std::vector<Triangle> around;
  for (Vertex v : loop) {
    for (int t : c.vertex_triangles(v)) around.push_back(c.triangles()[t]);
  }
  std::sort(around.begin(), around.end());
  around.erase(std::unique(around.begin(), around.end()), around.end());
  std::map<Vertex, Vertex> local;
  for (auto& t : around) {
    for (auto& v : t) v = local.emplace(v, static_cast<Vertex>(local.size())).first->second;
    t = make_triangle(t[0], t[1], t[2]);
  }
  return fundamental_chain(build_complex(around, static_cast<int>(local.size()))).has_value();
}

} // namespace

TEST_CASE("annulus glued along two triangle loops of a sphere") {
  auto host = sphere_host();
  auto t0 = host.complex.triangles().front();
  std::vector<Vertex> a(t0.begin(), t0.end());
  std::vector<Vertex> b;
  for (const auto& t : host.complex.triangles()) {
    if (std::none_of(t.begin(), t.end(), [&](Vertex v) { return std::find(a.begin(), a.end(), v) != a.end(); })) {
      b.assign(t.begin(), t.end());
      break;
    }
  }
  REQUIRE(b.size() == 3);
  AttachmentSpec spec{host, {a, b}, make_surface(true, 0, 2, {3, 3}), {}};
  auto r = attach_surface(spec);
  CHECK(euler_characteristic(r.surface.complex) == 2);
  CHECK(r.surface.locus.count(CircleKind::Tripod) == 2);
  CHECK(r.surface.normal);
}

TEST_CASE("disk glued to the core of an annulus") {
  auto host = validate_branched_surface(make_surface(true, 0, 2).triangulation);
  REQUIRE(host.locus.count(CircleKind::Collar) == 2);
  auto core = essential_triangle_loop(host);
  REQUIRE(core.size() == 3);
  auto r = attach_surface({host, {core}, make_surface(true, 0, 1, {3}), {}});
  CHECK(euler_characteristic(r.surface.complex) == 1);
  CHECK(r.surface.locus.count(CircleKind::Tripod) == 1);
  CHECK(r.surface.locus.count(CircleKind::Collar) == 2);
}

TEST_CASE("attachment preconditions") {
  auto host = validate_branched_surface(make_surface(true, 0, 2).triangulation);
  auto collar = host.locus.circles.front().cycle;
  auto patch = make_surface(true, 0, 1, {static_cast<int>(collar.size())});
  try {
    attach_surface({host, {collar}, patch, {}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CirclesIntersectLocus);
  }
  auto sphere = sphere_host();
  auto loop = link_cycle(sphere.complex, 0);
  try {
    attach_surface({sphere, {loop, loop}, make_surface(true, 0, 2, {8, 8}), {}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDisjoint);
  }
  try {
    attach_surface({sphere, {loop}, make_surface(true, 0, 1, {5}), {}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
}

TEST_CASE("lengths are matched by subdividing the coarser side") {
  auto sphere = sphere_host();
  auto loop = link_cycle(sphere.complex, 0);
  REQUIRE(loop.size() == 8);
  auto r = attach_surface({sphere, {loop}, make_surface(true, 0, 1, {4}), {}});
  CHECK(r.patch_subdivisions == 1);
  CHECK(r.host_subdivisions == 0);
  auto r2 = attach_surface({sphere, {loop}, make_surface(true, 0, 1, {16}), {}});
  CHECK(r2.host_subdivisions == 1);
  CHECK(r2.circles.front().size() == 16);
  CHECK(euler_characteristic(r2.surface.complex) == 3);
}

TEST_CASE("bubble attachment examples") {
  auto host = sphere_host();
  auto two = bubble_attach(host, star_disks(host.complex, {0, 5}));
  auto h = homology(two.surface.complex, Coeff::Integers);
  CHECK(h.degree[1] == AbelianGroup{1, {}});
  CHECK(h.degree[2] == AbelianGroup{2, {}});

  auto one = bubble_attach(host, star_disks(host.complex, {0}));
  h = homology(one.surface.complex, Coeff::Integers);
  CHECK(h.degree[1].is_trivial());
  CHECK(h.degree[2] == AbelianGroup{2, {}});

  auto torus = validate_branched_surface(barycentric_subdivide(torus7()));
  auto t = bubble_attach(torus, star_disks(torus.complex, {0}));
  h = homology(t.surface.complex, Coeff::Integers);
  CHECK(h.degree[1] == AbelianGroup{2, {}});
  CHECK(h.degree[2] == AbelianGroup{2, {}});
}

TEST_CASE("bubble preconditions") {
  auto host = sphere_host();
  auto star0 = vertex_star(host.complex, 0);
  auto nb = host.complex.neighbors(0).front();
  try {
    bubble_attach(host, {star0, vertex_star(host.complex, nb)});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DisksOverlap);
  }
  auto bundle = validate_branched_surface(capped_sheet_bundle(4, 3).complex);
  try {
    bubble_attach(bundle, {vertex_star(bundle.complex, 0)});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DiskTouchesLocus);
  }
  CHECK_THROWS_AS(bubble_attach(host, {}), Error);
}

TEST_CASE("prediction examples") {
  auto sphere = homology(octahedron(), Coeff::Integers);
  auto sphere_c = cohomology(octahedron(), Coeff::Integers);
  auto p = predict_thm1(sphere, sphere_c, 2, true, 0);
  CHECK(p.h1 == AbelianGroup{1, {}});
  CHECK(p.h2 == AbelianGroup{2, {}});
  p = predict_thm1(sphere, sphere_c, 1, true, 1);
  CHECK(p.h1 == AbelianGroup{2, {}});
  CHECK(p.h2 == AbelianGroup{2, {}});
  auto klein = make_surface(false, 2, 0).triangulation;
  p = predict_thm1(homology(klein, Coeff::Mod2), cohomology(klein, Coeff::Mod2), 1, true, 0);
  CHECK(p.h1 == AbelianGroup{2, {}});
  CHECK(p.h2 == AbelianGroup{2, {}});
  // Torsion in H1 of the host: no H^2 prediction.
  p = predict_thm1(homology(klein, Coeff::Integers), cohomology(klein, Coeff::Integers), 1, true, 0);
  CHECK_FALSE(p.ch2.has_value());
  CHECK_THROWS_AS(predict_thm1(sphere, sphere_c, 0, true, 0), Error);
}

TEST_CASE("checker examples") {
  auto host = sphere_host();
  auto rep = check_thm1(bubble_spec(host, star_disks(host.complex, {0, 5})), Coeff::Integers);
  CHECK(rep.hypotheses_hold());
  CHECK(rep.all_match());
  for (const char* name : {"H1", "H2", "H^1", "H^2", "cup vanishing (Z/2)", "pi1 free product"}) {
    REQUIRE(rep.find(name));
    CHECK(rep.find(name)->verdict == Verdict::Match);
  }
  CHECK(rep.simplified_pi1 == "< x1 | >");

  auto torus = validate_branched_surface(barycentric_subdivide(torus7()));
  std::vector<Vertex> meridian;
  for (Vertex v : {0, 1, 2, 3, 4, 5, 6}) meridian.push_back(v);
  meridian = subdivide_loop(torus7(), meridian);
  auto bad = check_thm1({torus, {meridian}, make_surface(true, 0, 1, {14}), {}}, Coeff::Integers);
  CHECK_FALSE(bad.hypotheses_hold());
  CHECK_FALSE(bad.prediction.has_value());
  CHECK(bad.find("H1")->verdict == Verdict::NoPrediction);
  CHECK(bad.failed_hypotheses() == std::vector<std::string>{"circle 0 null-homologous"});

  auto mobius = check_thm1({host, {link_cycle(host.complex, 0)}, make_surface(false, 1, 1, {8}), {}}, Coeff::Mod2);
  CHECK(mobius.hypotheses_hold());
  CHECK(mobius.all_match());
  CHECK(mobius.find("H1")->verdict == Verdict::Match);
  CHECK(mobius.homology.degree[1] == AbelianGroup{1, {}});
  auto mobius_z = check_thm1({host, {link_cycle(host.complex, 0)}, make_surface(false, 1, 1, {8}), {}}, Coeff::Integers);
  CHECK(mobius_z.failed_hypotheses() == std::vector<std::string>{"patch orientable"});
}

TEST_CASE("bridge cycles pair with their duals") {
  std::mt19937 rng(17);
  auto host = validate_branched_surface(barycentric_subdivide(make_surface(true, 2, 0).triangulation));
  for (int trial = 0; trial < 4; ++trial) {
    auto centers = separated_vertices(host.complex, shuffled_vertices(host.complex, rng), 3);
    REQUIRE(centers.size() == 3);
    auto r = bubble_attach(host, star_disks(host.complex, centers));
    auto g = thm1_generators(r);
    REQUIRE(g.bridges.size() == 2);
    auto q = h1_basis(r.surface.complex, Coeff::Rationals);
    IntMatrix cols(q.size(), 2);
    for (int j = 0; j < 2; ++j) {
      auto c = q.coordinates(g.bridges[j]);
      for (int i = 0; i < q.size(); ++i) cols(i, j) = c[i];
      for (int k = 0; k < 2; ++k) CHECK(pair(g.bridge_duals[k], g.bridges[j], Coeff::Integers) == (j == k ? 1 : 0));
    }
    CHECK(matrix_rank(cols) == 2);
  }
}

TEST_CASE("Heegaard ledger") {
  HeegaardLedger ledger;
  CHECK(apply_heegaard(ledger, 3, Orientability::Orientable).genus_bound == 2);
  ledger.genus_bound = 2;
  CHECK(apply_heegaard(ledger, 1, Orientability::Orientable).genus_bound == 2);
  ledger.genus_bound = 1;
  auto n = apply_heegaard(ledger, 2, Orientability::NonOrientable);
  CHECK(n.genus_bound == 2);
  CHECK(n.ambient == Orientability::NonOrientable);
  REQUIRE(n.history.size() == 1);
  CHECK(n.history[0].genus_before == 1);
  CHECK_THROWS_AS(apply_heegaard(ledger, 0, Orientability::Orientable), Error);
  CHECK_THROWS_AS(apply_heegaard(n, 1, Orientability::Orientable), Error);
  // Bound never decreases.
  HeegaardLedger chain;
  for (int l : {1, 4, 2, 1, 3}) {
    int before = chain.genus_bound;
    chain = apply_heegaard(chain, l, Orientability::Orientable);
    CHECK(chain.genus_bound >= before);
  }
  CHECK(chain.genus_bound == 0 + 3 + 1 + 0 + 2);
}

TEST_CASE("surgery invariants on random instances") {
  std::mt19937 rng(2024);
  std::vector<BranchedSurface> hosts{sphere_host(),
                                     validate_branched_surface(barycentric_subdivide(torus7())),
                                     validate_branched_surface(barycentric_subdivide(projective_plane6())),
                                     validate_branched_surface(capped_sheet_bundle(6, 3).complex),
                                     validate_branched_surface(capped_sheet_bundle(6, 3, {0, 2, 1}).complex)};
  for (int trial = 0; trial < 30; ++trial) {
    const auto& host = hosts[trial % hosts.size()];
    const int l = 1 + static_cast<int>(rng() % 3);
    std::set<Vertex> locus;
    for (const auto& bc : host.locus.circles) locus.insert(bc.cycle.begin(), bc.cycle.end());
    auto centers = separated_vertices(host.complex, shuffled_vertices(host.complex, rng), l, locus);
    std::vector<std::vector<Vertex>> circles;
    for (Vertex v : centers) circles.push_back(link_cycle(host.complex, v));
    if (circles.empty()) continue;
    std::vector<int> lengths;
    for (const auto& c : circles) lengths.push_back(static_cast<int>(c.size()));
    const bool orientable = rng() % 2;
    auto patch = make_surface(orientable, orientable ? rng() % 2 : 1, static_cast<int>(circles.size()), lengths);
    std::vector<GlueDirection> dirs;
    for (std::size_t j = 0; j < circles.size(); ++j) dirs.push_back(rng() % 2 ? GlueDirection::Aligned : GlueDirection::Reversed);
    auto r = attach_surface({host, circles, patch, dirs});
    CAPTURE(trial);
    CHECK(euler_characteristic(r.surface.complex) == euler_characteristic(host.complex) + euler_characteristic(patch.triangulation));
    CHECK(r.surface.locus.circles.size() == host.locus.circles.size() + circles.size());
    bool all_two_sided = true;
    for (const auto& c : circles) all_two_sided = all_two_sided && two_sided(host.complex, c);
    CHECK(r.surface.normal == (host.normal && all_two_sided));
    CHECK(abelianization(edge_path_presentation(r.surface.complex)) == homology(r.surface.complex, Coeff::Integers).degree[1]);
  }
}

TEST_CASE("one-sided circles make the result non-normal") {
  // A one-sided loop in the projective plane: the three edges through 1, 3, 4
  // around a Moebius band, subdivided so that the loop has a collar.
  auto rp2 = projective_plane6();
  std::vector<Vertex> loop;
  for (Vertex a = 0; a < 6 && loop.empty(); ++a) {
    for (Vertex b = a + 1; b < 6 && loop.empty(); ++b) {
      for (Vertex c = b + 1; c < 6 && loop.empty(); ++c) {
        std::vector<Vertex> cand{a, b, c};
        if (!is_simple_edge_loop(rp2, cand) || rp2.triangle_index(a, b, c)) continue;
        if (!is_null_homologous(rp2, cand, Coeff::Mod2) && !two_sided(rp2, cand)) loop = cand;
      }
    }
  }
  REQUIRE(loop.size() == 3);
  auto host = validate_branched_surface(barycentric_subdivide(rp2));
  auto circle = subdivide_loop(rp2, loop);
  CHECK_FALSE(two_sided(host.complex, circle));
  auto r = attach_surface({host, {circle}, make_surface(true, 0, 1, {6}), {}});
  CHECK_FALSE(r.surface.normal);
  CHECK(r.surface.locus.circles.front().monodromy == Monodromy::Transposition);
}
