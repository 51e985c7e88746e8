#include "doctest.h"

#include "bsurf/branch.hpp"
#include "bsurf/error.hpp"
#include "bsurf/fixtures.hpp"
#include "bsurf/surfaces.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace bsurf;

namespace {

std::optional<ErrorCode> failure(const SimplicialComplex2& c) {
  try {
    validate_branched_surface(c);
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

int fixed_points(const std::vector<int>& perm) {
  int n = 0;
  for (int i = 0; i < static_cast<int>(perm.size()); ++i) n += perm[i] == i;
  return n;
}

} // namespace

TEST_CASE("closed surface has an empty locus") {
  auto bs = validate_branched_surface(octahedron());
  CHECK(bs.locus.circles.empty());
  CHECK(bs.normal);
}

TEST_CASE("trivial tripod bundle: one tripod and three collar circles") {
  auto k = tripod_bundle(4);
  auto bs = validate_branched_surface(k.complex);
  CHECK(bs.locus.circles.size() == 4);
  CHECK(bs.locus.count(CircleKind::Tripod) == 1);
  CHECK(bs.locus.count(CircleKind::Collar) == 3);
  CHECK(bs.normal);
  for (const auto& c : bs.locus.circles) {
    CHECK(c.cycle.size() == 4);
    CHECK(c.monodromy == Monodromy::Identity);
    if (c.kind == CircleKind::Tripod) CHECK(same_cycle(c.cycle, k.core));
  }
}

TEST_CASE("leg-swap mapping torus is a non-normal branched surface") {
  auto k = leg_swap_bundle(4);
  auto bs = validate_branched_surface(k.complex);
  CHECK_FALSE(bs.normal);
  CHECK(bs.locus.count(CircleKind::Tripod) == 1);
  // Legs 1 and 2 close up into one collar circle of double length.
  CHECK(bs.locus.count(CircleKind::Collar) == 2);
  for (const auto& c : bs.locus.circles) {
    if (c.kind == CircleKind::Tripod) CHECK(c.monodromy == Monodromy::Transposition);
  }
}

TEST_CASE("cyclic leg permutation is rejected") {
  CHECK(failure(leg_cycle_bundle(4).complex) == ErrorCode::IllegalMonodromy);
}

TEST_CASE("edge in four triangles is rejected") {
  CHECK(failure(sheet_bundle(4, 4).complex) == ErrorCode::NotABranchedSurface);
  CHECK(failure(build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}}, 6)) == ErrorCode::NotABranchedSurface);
}

TEST_CASE("open book is not a branched surface") {
  // The triple edge does not close up into a circle.
  CHECK(failure(open_book()) == ErrorCode::NotABranchedSurface);
}

TEST_CASE("annulus: boundary circles become collar circles") {
  auto s = make_surface(true, 0, 2);
  auto bs = validate_branched_surface(s.triangulation);
  CHECK(bs.locus.count(CircleKind::Collar) == 2);
  CHECK(bs.locus.count(CircleKind::Tripod) == 0);
  CHECK(bs.normal);
}

TEST_CASE("random leg permutations: verdict follows cycle type") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    const int n = 3 + static_cast<int>(rng() % 5);
    auto k = sheet_bundle(n, 3, perm);
    auto verdict = failure(k.complex);
    const int fixed = fixed_points(perm);
    CAPTURE(n);
    CAPTURE(fixed);
    if (fixed == 0) {
      CHECK(verdict == ErrorCode::IllegalMonodromy);
      continue;
    }
    REQUIRE_FALSE(verdict);
    auto bs = validate_branched_surface(k.complex);
    CHECK(bs.normal == (fixed == 3));
    // Property: normality survives subdivision.
    CHECK(validate_branched_surface(barycentric_subdivide(k.complex)).normal == bs.normal);
  }
}

TEST_CASE("accepted loci: link type agrees with edge counts, circles disjoint") {
  std::vector<SimplicialComplex2> cases{tripod_bundle(3).complex, leg_swap_bundle(5).complex,
                                        capped_sheet_bundle(4, 3).complex, make_surface(false, 1, 3).triangulation,
                                        barycentric_subdivide(tripod_bundle(4).complex)};
  for (const auto& c : cases) {
    auto bs = validate_branched_surface(c);
    std::set<Vertex> seen;
    for (const auto& circle : bs.locus.circles) {
      const int want = circle.kind == CircleKind::Collar ? 1 : 3;
      const LinkType link = circle.kind == CircleKind::Collar ? LinkType::Path : LinkType::Theta;
      for (std::size_t i = 0; i < circle.cycle.size(); ++i) {
        Vertex a = circle.cycle[i];
        Vertex b = circle.cycle[(i + 1) % circle.cycle.size()];
        CHECK(c.edge_degree(*c.edge_index(a, b)) == want);
        CHECK(classify_link(c, a) == link);
        CHECK(seen.insert(a).second);
      }
      CHECK(is_simple_edge_loop(c, circle.cycle));
    }
  }
}

TEST_CASE("canonical cycle form") {
  CHECK(canonical_cycle({5, 2, 9, 4}) == std::vector<Vertex>{2, 5, 4, 9});
  CHECK(same_cycle({1, 2, 3, 4}, {3, 2, 1, 4}));
  CHECK_FALSE(same_cycle({1, 2, 3, 4}, {1, 3, 2, 4}));
}
