#include "doctest.h"

#include "bsurf/error.hpp"
#include "bsurf/reeb.hpp"
#include "bsurf/surfaces.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace bsurf;

namespace {

std::vector<Rational> index_values(int n) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.emplace_back(i);
  return v;
}

std::vector<Rational> random_values(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<Rational> v;
  for (int x : p) v.emplace_back(x, 7);
  return v;
}

bool is_extremum(const SimplicialComplex2& s, const std::vector<Rational>& v, Vertex x) {
  auto nb = s.neighbors(x);
  const bool all_above = std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return v[x] < v[w]; });
  const bool all_below = std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return v[w] < v[x]; });
  return all_above || all_below;
}

} // namespace

TEST_CASE("octahedron height is a path") {
  auto oct = octahedron();
  std::vector<Rational> z{Rational(1), Rational(1, 10), Rational(2, 10), Rational(3, 10), Rational(4, 10),
                          Rational(-1)};
  auto g = reeb_graph(oct, z);
  CHECK(g.nodes.size() == 2);
  CHECK(g.nodes[0].vertex == 5);
  CHECK(g.nodes[1].vertex == 0);
  CHECK(g.arcs == std::vector<ReebArc>{{0, 1}});
  CHECK(reeb_betti1(g) == 0);
  CHECK(reeb_isomorphic(g, reeb_graph_by_slices(oct, z)));
}

TEST_CASE("torus index height") {
  auto t = torus7();
  auto g = reeb_graph(t, index_values(7));
  // Frozen from the slice construction.
  CHECK(g.nodes.size() == 4);
  CHECK(g.arcs == std::vector<ReebArc>{{0, 1}, {1, 2}, {1, 2}, {2, 3}});
  CHECK(reeb_betti1(g) == 1);
  CHECK(g.to_string().find("arc 1 2\narc 1 2") != std::string::npos);
}

TEST_CASE("two disjoint spheres") {
  auto two = disjoint_union(octahedron(), tetrahedron_boundary());
  auto g = reeb_graph(two, index_values(two.vertex_count()));
  CHECK(g.component_count() == 2);
  CHECK(reeb_betti1(g) == 0);
}

TEST_CASE("reeb input errors") {
  auto oct = octahedron();
  auto v = index_values(6);
  v[3] = v[2];
  CHECK_THROWS_WITH_AS(reeb_graph(oct, v), doctest::Contains("DuplicateValues"), Error);
  auto disk = make_surface(true, 0, 1, {}).triangulation;
  CHECK_THROWS_WITH_AS(reeb_graph(disk, index_values(disk.vertex_count())), doctest::Contains("NotClosedSurface"),
                       Error);
  CHECK_THROWS_WITH_AS(reeb_graph(oct, index_values(5)), doctest::Contains("InvalidParameters"), Error);
}

TEST_CASE("reduction keeps critical structure") {
  ReebGraph g;
  for (int i = 0; i < 4; ++i) g.nodes.push_back({i, Rational(i)});
  g.arcs = {{0, 1}, {1, 2}, {2, 3}};
  auto r = reduce_regular_nodes(g);
  CHECK(r.nodes.size() == 2);
  CHECK(r.arcs == std::vector<ReebArc>{{0, 1}});
}

TEST_CASE("sweep agrees with slices on random heights") {
  std::mt19937 rng(2024);
  const std::vector<std::pair<SimplicialComplex2, int>> surfaces = {
      {octahedron(), 0},
      {barycentric_subdivide(octahedron()), 0},
      {torus7(), 1},
      {barycentric_subdivide(torus7()), 1},
      {make_surface(true, 2, 0, {}).triangulation, 2},
  };
  for (int trial = 0; trial < 40; ++trial) {
    const auto& [s, genus] = surfaces[trial % surfaces.size()];
    auto values = random_values(s.vertex_count(), rng);
    auto sweep = reeb_graph(s, values);
    auto slices = reeb_graph_by_slices(s, values);
    CHECK(reeb_isomorphic(sweep, slices));
    CHECK(reeb_betti1(sweep) <= genus);
    if (genus == 0) CHECK(reeb_betti1(sweep) == 0);
    CHECK(sweep.component_count() == 1);
    auto deg = sweep.degrees();
    for (int i = 0; i < static_cast<int>(sweep.nodes.size()); ++i) {
      CHECK((deg[i] == 1) == is_extremum(s, values, sweep.nodes[i].vertex));
    }
    for (Vertex x = 0; x < s.vertex_count(); ++x) {
      if (!is_extremum(s, values, x)) continue;
      CHECK(std::any_of(sweep.nodes.begin(), sweep.nodes.end(), [&](const ReebNode& n) { return n.vertex == x; }));
    }
    for (const auto& a : sweep.arcs) CHECK(sweep.nodes[a.lower].value < sweep.nodes[a.upper].value);
  }
}
