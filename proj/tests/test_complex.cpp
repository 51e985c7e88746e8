#include "doctest.h"

#include "bsurf/bsc_io.hpp"
#include "bsurf/complex.hpp"
#include "bsurf/error.hpp"
#include "bsurf/fixtures.hpp"
#include "bsurf/homology.hpp"
#include "bsurf/surfaces.hpp"

#include <random>
#include <sstream>

using namespace bsurf;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

} // namespace

TEST_CASE("octahedron builds with twelve edges") {
  auto c = octahedron();
  CHECK(c.vertex_count() == 6);
  CHECK(c.triangle_count() == 8);
  CHECK(c.edge_count() == 12);
  for (int e = 0; e < c.edge_count(); ++e) CHECK(c.edge_degree(e) == 2);
}

TEST_CASE("build_complex rejects malformed input") {
  CHECK(code_of([] { build_complex({{0, 0, 1}}, 2); }) == ErrorCode::DegenerateTriangle);
  CHECK(code_of([] { build_complex({{0, 1, 5}}, 3); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { build_complex({{0, 1, 2}, {2, 1, 0}}, 3); }) == ErrorCode::DuplicateTriangle);
  CHECK(code_of([] { build_complex({{0, 1, 2}}, 4); }) == ErrorCode::NonPure);
}

TEST_CASE("open book edge lies in three triangles") {
  auto c = open_book();
  auto e = c.edge_index(1, 0);
  REQUIRE(e);
  CHECK(c.edge_degree(*e) == 3);
}

TEST_CASE("canonical ordering does not depend on input order") {
  auto a = build_complex({{3, 4, 5}, {0, 2, 1}, {1, 2, 3}}, 6);
  auto b = build_complex({{2, 1, 3}, {5, 3, 4}, {1, 0, 2}}, 6);
  CHECK(a == b);
  CHECK(a.triangles() == b.triangles());
  CHECK(a.edges() == b.edges());
  CHECK(a.triangles().front() == Triangle{0, 1, 2});
}

TEST_CASE("link classification") {
  auto oct = octahedron();
  for (Vertex v = 0; v < 6; ++v) CHECK(classify_link(oct, v) == LinkType::Cycle);
  auto tri = build_complex({{0, 1, 2}}, 3);
  for (Vertex v = 0; v < 3; ++v) CHECK(classify_link(tri, v) == LinkType::Path);

  auto k = tripod_bundle(4);
  for (Vertex v : k.core) {
    auto g = link_graph(k.complex, v);
    // Two core neighbours joined by one three-arc path through each leg.
    CHECK(g.arcs.size() == 9);
    CHECK(g.nodes.size() == 8);
    CHECK(classify_link(k.complex, v) == LinkType::Theta);
  }
  for (const auto& row : k.outer) {
    for (Vertex v : row) CHECK(classify_link(k.complex, v) == LinkType::Path);
  }
  CHECK(classify_link(open_book(), 2) == LinkType::Path);
  CHECK(classify_link(open_book(), 0) == LinkType::Other);
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_characteristic(octahedron()) == 2);
  CHECK(euler_characteristic(torus7()) == 0);
  auto k = tripod_bundle(5);
  CHECK(k.complex.vertex_count() == 20);
  CHECK(k.complex.edge_count() == 50);
  CHECK(k.complex.triangle_count() == 30);
  CHECK(euler_characteristic(k.complex) == 0);
}

TEST_CASE("connected components") {
  CHECK(connected_components(octahedron()).size() == 1);
  CHECK(connected_components(disjoint_union(octahedron(), octahedron())).size() == 2);
  CHECK(connected_components(SimplicialComplex2{}).empty());
}

TEST_CASE("barycentric subdivision counts") {
  auto tri = build_complex({{0, 1, 2}}, 3);
  auto sd = barycentric_subdivide(tri);
  CHECK(sd.vertex_count() == 7);
  CHECK(sd.triangle_count() == 6);
  auto oct = barycentric_subdivide(octahedron());
  CHECK(euler_characteristic(oct) == 2);
  CHECK(oct.vertex_count() == 6 + 12 + 8);
  CHECK(oct.triangle_count() == 48);
  CHECK(homology(barycentric_subdivide(torus7()), Coeff::Integers) == homology(torus7(), Coeff::Integers));
}

TEST_CASE("subdivided loop stays a loop") {
  auto t = torus7();
  std::vector<Vertex> loop{0, 1, 2};
  REQUIRE(is_simple_edge_loop(t, loop));
  auto sd = barycentric_subdivide(t);
  auto fine = subdivide_loop(t, loop);
  CHECK(fine.size() == 6);
  CHECK(is_simple_edge_loop(sd, fine));
}

TEST_CASE("closed surface iff every link is a cycle iff every edge has two triangles") {
  std::mt19937 rng(20261018);
  std::vector<SimplicialComplex2> cases{octahedron(), torus7(), projective_plane6(), open_book(),
                                        tripod_bundle(3).complex, make_surface(true, 0, 2).triangulation,
                                        make_surface(false, 2, 0).triangulation};
  for (const auto& c : cases) {
    bool links = true;
    for (Vertex v = 0; v < c.vertex_count(); ++v) links = links && classify_link(c, v) == LinkType::Cycle;
    bool edges = true;
    for (int e = 0; e < c.edge_count(); ++e) edges = edges && c.edge_degree(e) == 2;
    CHECK(links == edges);
    CHECK(links == is_closed_surface(c));
  }
}

TEST_CASE("BSC round trip is exact") {
  BscDocument doc;
  doc.complex = barycentric_subdivide(torus7());
  doc.branches.push_back({CircleKind::Tripod, {0, 1, 2}});
  doc.function.push_back({0, Rational::parse("1.5")});
  std::string text = to_bsc_string(doc);
  std::istringstream in(text);
  BscDocument back = parse_bsc(in);
  CHECK(back.complex == doc.complex);
  CHECK(to_bsc_string(back) == text);
}

TEST_CASE("BSC parser reports line-level errors") {
  std::istringstream missing_header("vertices 3\ntriangle 0 1 2\n");
  CHECK(code_of([&] { parse_bsc(missing_header); }) == ErrorCode::ParseError);
  std::istringstream bad_index("bsc 1\nvertices 3\ntriangle 0 1 x\n");
  CHECK(code_of([&] { parse_bsc(bad_index); }) == ErrorCode::ParseError);
  std::istringstream ok("# comment\nbsc 1\nvertices 3\n\ntriangle 2 1 0  # trailing\n");
  CHECK(parse_bsc(ok).complex.triangle_count() == 1);
}
