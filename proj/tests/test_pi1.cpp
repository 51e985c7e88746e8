#include "doctest.h"

#include "bsurf/error.hpp"
#include "bsurf/fixtures.hpp"
#include "bsurf/homology.hpp"
#include "bsurf/pi1.hpp"
#include "bsurf/surfaces.hpp"

#include <random>

using namespace bsurf;

TEST_CASE("abelianization of small presentations") {
  CHECK(abelianization({2, {{1, 2, -1, -2}}}) == AbelianGroup{2, {}});
  CHECK(abelianization({1, {{1, 1}}}) == AbelianGroup{0, {2}});
  CHECK(abelianization({2, {}}) == AbelianGroup{2, {}});
  CHECK(abelianization({2, {{1, 1, 2, 2, 2}, {2, 2, 2, 1, -2}}}).rank == 0);
}

TEST_CASE("Tietze simplification examples") {
  GroupPresentation p{2, {{2}}};
  auto s = tietze_simplify(p, 10);
  CHECK(s == GroupPresentation{1, {}});
  GroupPresentation free1{1, {}};
  CHECK(tietze_simplify(free1, 10) == free1);
  CHECK(tietze_simplify(GroupPresentation{2, {{1, -1}, {2, 1, -2, -1}}}, 0).relators.size() == 1);
}

TEST_CASE("edge-path presentations") {
  auto oct = octahedron();
  auto p = edge_path_presentation(oct);
  CHECK(p.generators == oct.edge_count() - (oct.vertex_count() - 1));
  CHECK(p.relators.size() == 8);
  CHECK(abelianization(p).is_trivial());
  auto simplified = tietze_simplify(p, default_tietze_budget(p));
  CHECK(simplified == GroupPresentation{0, {}});

  CHECK(abelianization(edge_path_presentation(torus7())) == AbelianGroup{2, {}});
  CHECK_THROWS_AS(edge_path_presentation(disjoint_union(oct, oct)), Error);
  CHECK_THROWS_AS(edge_path_presentation(oct, 17), Error);
}

TEST_CASE("abelianized edge-path group equals integral H1 on fixtures") {
  std::vector<SimplicialComplex2> cases{octahedron(),
                                        torus7(),
                                        projective_plane6(),
                                        make_surface(false, 2, 0).triangulation,
                                        make_surface(true, 2, 1).triangulation,
                                        tripod_bundle(4).complex,
                                        leg_swap_bundle(3).complex,
                                        capped_sheet_bundle(4, 3).complex,
                                        capped_sheet_bundle(3, 3, {0, 2, 1}).complex};
  for (const auto& c : cases) {
    auto p = edge_path_presentation(c);
    CHECK(p.generators == c.edge_count() - c.vertex_count() + 1);
    auto h1 = homology(c, Coeff::Integers).degree[1];
    CHECK(abelianization(p) == h1);
    CHECK(abelianization(tietze_simplify(p, default_tietze_budget(p))) == h1);
  }
}

TEST_CASE("Tietze simplification preserves abelianization on random presentations") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 60; ++trial) {
    GroupPresentation p;
    p.generators = 1 + static_cast<int>(rng() % 4);
    const int relators = static_cast<int>(rng() % 4);
    for (int r = 0; r < relators; ++r) {
      Word w;
      const int len = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < len; ++i) {
        int g = 1 + static_cast<int>(rng() % p.generators);
        w.push_back(rng() % 2 ? g : -g);
      }
      p.relators.push_back(w);
    }
    CAPTURE(p.to_string());
    auto s = tietze_simplify(p, 20);
    CHECK(abelianization(s) == abelianization(p));
    CHECK(s.generators <= p.generators);
  }
}

TEST_CASE("word helpers") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(inverse_word({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(GroupPresentation{2, {{1, -2}}}.to_string() == "< x1, x2 | x1 x2^-1 >");
}
