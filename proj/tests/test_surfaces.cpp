#include "doctest.h"

#include "bsurf/branch.hpp"
#include "bsurf/error.hpp"
#include "bsurf/homology.hpp"
#include "bsurf/surfaces.hpp"

#include <algorithm>

using namespace bsurf;

TEST_CASE("make_surface examples") {
  auto torus = make_surface(true, 1, 0);
  CHECK(euler_characteristic(torus.triangulation) == 0);
  CHECK(homology(torus.triangulation, Coeff::Integers).degree[1] == AbelianGroup{2, {}});
  auto annulus = make_surface(true, 0, 2);
  CHECK(euler_characteristic(annulus.triangulation) == 0);
  CHECK(annulus.boundaries.size() == 2);
  auto klein = make_surface(false, 2, 0);
  CHECK(euler_characteristic(klein.triangulation) == 0);
  CHECK(homology(klein.triangulation, Coeff::Integers).degree[1] == AbelianGroup{1, {2}});
}

TEST_CASE("make_surface rejects bad parameters") {
  CHECK_THROWS_AS(make_surface(false, 0, 1), Error);
  CHECK_THROWS_AS(make_surface(true, -1, 0), Error);
  CHECK_THROWS_AS(make_surface(true, 0, 2, {6}), Error);
  CHECK_THROWS_AS(make_surface(true, 0, 1, {2}), Error);
}

TEST_CASE("close_up examples") {
  auto sphere = close_up(make_surface(true, 0, 2));
  CHECK(euler_characteristic(sphere.triangulation) == 2);
  CHECK(is_closed_surface(sphere.triangulation));
  auto torus = close_up(make_surface(true, 1, 1));
  CHECK(homology(torus.triangulation, Coeff::Integers).degree[1] == AbelianGroup{2, {}});
  auto rp2 = close_up(make_surface(false, 1, 1));
  CHECK(homology(rp2.triangulation, Coeff::Integers).degree[1] == AbelianGroup{0, {2}});
}

TEST_CASE("reference H1 of closed surfaces") {
  CHECK(reference_h1_closed(true, 2, Coeff::Integers) == AbelianGroup{4, {}});
  CHECK(reference_h1_closed(false, 1, Coeff::Integers) == AbelianGroup{0, {2}});
  CHECK(reference_h1_closed(false, 2, Coeff::Mod2) == AbelianGroup{2, {}});
  CHECK_THROWS_AS(reference_h1_closed(false, 0, Coeff::Integers), Error);
}

TEST_CASE("surface family: invariants and closed-up homology") {
  for (bool orientable : {true, false}) {
    for (int g = orientable ? 0 : 1; g <= 4; ++g) {
      for (int b = 0; b <= 4; ++b) {
        CAPTURE(orientable);
        CAPTURE(g);
        CAPTURE(b);
        auto s = make_surface(orientable, g, b);
        const auto& t = s.triangulation;
        CHECK(euler_characteristic(t) == s.expected_euler_characteristic());
        CHECK(static_cast<int>(s.boundaries.size()) == b);
        CHECK(is_surface_with_boundary(t));
        CHECK(connected_components(t).size() == 1);
        CHECK(fundamental_chain(t).has_value() == orientable);
        // Boundary loops are exactly the edges in one triangle.
        auto loops = boundary_loops(t);
        REQUIRE(loops);
        CHECK(static_cast<int>(loops->size()) == b);
        for (const auto& loop : s.boundaries) {
          CHECK(loop.size() == static_cast<std::size_t>(kDefaultBoundaryLength));
          CHECK(std::any_of(loops->begin(), loops->end(), [&](const auto& l) { return same_cycle(l, loop); }));
        }
        auto closed = close_up(s);
        CHECK(is_closed_surface(closed.triangulation));
        CHECK(euler_characteristic(closed.triangulation) == euler_characteristic(t) + b);
        for (Coeff coeff : {Coeff::Integers, Coeff::Mod2}) {
          CHECK(homology(closed.triangulation, coeff).degree[1] == reference_h1_closed(orientable, g, coeff));
        }
      }
    }
  }
}

TEST_CASE("requested boundary lengths are honoured") {
  auto s = make_surface(true, 1, 3, {3, 8, 13});
  REQUIRE(s.boundaries.size() == 3);
  CHECK(s.boundaries[0].size() == 3);
  CHECK(s.boundaries[1].size() == 8);
  CHECK(s.boundaries[2].size() == 13);
  CHECK(euler_characteristic(s.triangulation) == -3);
  CHECK(is_surface_with_boundary(s.triangulation));
  for (const auto& loop : s.boundaries) CHECK(is_simple_edge_loop(s.triangulation, loop));
}

TEST_CASE("fundamental chain is a relative cycle") {
  auto s = make_surface(true, 2, 2);
  auto f = fundamental_chain(s.triangulation);
  REQUIRE(f);
  auto boundary = chain_complex(s.triangulation).d2.apply(*f);
  for (int e = 0; e < s.triangulation.edge_count(); ++e) {
    if (s.triangulation.edge_degree(e) == 2) CHECK(boundary[e] == 0);
    else CHECK((boundary[e] == 1 || boundary[e] == -1));
  }
  auto closed = fundamental_chain(torus7());
  REQUIRE(closed);
  CHECK(chain_complex(torus7()).d2.apply(*closed) == std::vector<Int>(torus7().edge_count(), 0));
  CHECK_FALSE(fundamental_chain(projective_plane6()));
}
