#include "doctest.h"

#include "bsurf/bsc_io.hpp"
#include "bsurf/cli.hpp"
#include "bsurf/error.hpp"
#include "bsurf/fixtures.hpp"
#include "bsurf/surfaces.hpp"

#include <filesystem>
#include <sstream>

using namespace bsurf;

namespace {

const std::string kData = BSURF_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

} // namespace

TEST_CASE("fnv1a reference values") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("validate octahedron") {
  auto r = run({"validate", data("octahedron.bsc")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "closed surface, 0 branch circles"));
  CHECK(has(r.out, "input: " + data("octahedron.bsc") + " fnv1a:"));
}

TEST_CASE("validate branch fixtures") {
  auto k = run({"validate", data("kxs1.bsc")});
  CHECK(k.code == 0);
  CHECK(has(k.out, "4 branch circles"));
  auto s = run({"validate", data("leg_swap.bsc")});
  CHECK(s.code == 0);
  CHECK(has(s.out, "monodromy transposition"));
  CHECK(has(s.out, "normal: no"));
  auto c = run({"validate", data("leg_cycle.bsc")});
  CHECK(c.code == 1);
  CHECK(has(c.out, "IllegalMonodromy"));
}

TEST_CASE("complex and branched gates are separate") {
  auto plain = run({"homology", "--coeff", "z", data("bad_edge4.bsc")});
  CHECK(plain.code == 0);
  CHECK(has(plain.out, "H1 = 0"));
  auto gated = run({"homology", "--coeff", "z", "--branched", data("bad_edge4.bsc")});
  CHECK(gated.code == 1);
  CHECK(has(gated.out, "NotABranchedSurface"));
}

TEST_CASE("homology, cohomology and cup") {
  auto h = run({"homology", "--coeff", "z", data("klein.bsc")});
  CHECK(has(h.out, "H1 = Z + Z/2"));
  auto c = run({"cohomology", "--coeff", "z", data("klein.bsc")});
  CHECK(has(c.out, "H^2 = Z/2"));
  auto cup = run({"cup", "--coeff", "z2", data("torus.bsc")});
  CHECK(cup.code == 0);
  CHECK(has(cup.out, "all zero: no"));
  CHECK(run({"cup", "--coeff", "q", data("torus.bsc")}).code == 2);
}

TEST_CASE("pi1 and cycle class") {
  auto p = run({"pi1", data("torus.bsc")});
  CHECK(has(p.out, "abelianization: Z^2"));
  auto cc = run({"cycle-class", data("octahedron.bsc"), "--loop", "1", "2", "3", "4"});
  CHECK(cc.code == 0);
  CHECK(has(cc.out, "null-homologous: yes"));
}

TEST_CASE("check-thm1 on the sphere bubble") {
  auto r = run({"check-thm1", data("sphere.bsc"), "--disks", data("sphere_disks.txt"), "--coeff", "z"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "verdict: all asserted items MATCH"));
  CHECK_FALSE(has(r.out, "FAIL"));
  auto q = run({"--quiet", "check-thm1", data("sphere.bsc"), "--spec", data("sphere_annulus.spec"), "--coeff", "z2"});
  CHECK(q.code == 0);
  CHECK(q.out == "verdict: all asserted items MATCH\n");
}

TEST_CASE("attach writes a file that reads back") {
  const auto tmp = std::filesystem::temp_directory_path() / "bsurf_attach_test.bsc";
  auto r = run({"attach", data("sphere.bsc"), "--spec", data("sphere_annulus.spec"), "-o", tmp.string()});
  CHECK(r.code == 0);
  CHECK(has(r.out, "euler: host 2, patch 0, result 2"));
  auto doc = read_bsc_file(tmp.string());
  CHECK(doc.branches.size() == 2);
  auto again = run({"validate", tmp.string()});
  CHECK(again.code == 0);
  CHECK(has(again.out, "branched surface, 2 branch circles"));
  std::filesystem::remove(tmp);
}

TEST_CASE("generated surfaces round trip") {
  const auto tmp = std::filesystem::temp_directory_path() / "bsurf_make_test.bsc";
  for (const char* flag : {"--orientable", "--nonorientable"}) {
    auto r = run({"make-surface", flag, "--genus", "2", "--boundaries", "2", "-o", tmp.string()});
    CHECK(r.code == 0);
    auto doc = read_bsc_file(tmp.string());
    std::istringstream text(to_bsc_string(doc));
    CHECK(to_bsc_string(parse_bsc(text)) == to_bsc_string(doc));
    auto v = run({"validate", tmp.string()});
    CHECK(v.code == 0);
    CHECK(has(v.out, "surface with boundary, 2 branch circles"));
  }
  std::filesystem::remove(tmp);
}

TEST_CASE("heegaard ledger command") {
  auto r = run({"heegaard", "--genus", "2", "--step", "1", "--step", "2:nonorientable"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "step l=1 orientable: 2 -> 2"));
  CHECK(has(r.out, "step l=2 non-orientable: 2 -> 3"));
  auto bad = run({"heegaard", "--ambient", "nonorientable", "--step", "2:orientable"});
  CHECK(bad.code == 1);
  CHECK(has(bad.out, "InvalidParameters"));
  CHECK(run({"heegaard", "--step", "0"}).code == 1);
}

TEST_CASE("map-validate verdicts") {
  auto ok = run({"map-validate", data("kxs1.bsc"), data("annulus_target.bsc"), "--assign",
                 data("kxs1_projection.txt")});
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "verdict: born from an SSNS map"));
  CHECK(has(ok.out, "tripod vertex 3: (1|2)"));
  auto fold = run({"map-validate", data("octahedron.bsc"), data("octahedron.bsc"), "--assign",
                   data("octahedron_fold.txt")});
  CHECK(fold.code == 1);
  CHECK(has(fold.out, "verdict: fail"));
}

TEST_CASE("reeb with oracle") {
  auto r = run({"--oracle", "reeb", data("torus.bsc")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "betti1 1"));
  CHECK(has(r.out, "oracle: agrees"));
  auto none = run({"reeb", data("sphere.bsc")});
  CHECK(none.code == 1);
  CHECK(has(none.out, "ParseError"));
}

TEST_CASE("batch reports are reproducible") {
  auto a = run({"--seed", "11", "batch", kData});
  auto b = run({"--seed", "11", "batch", kData});
  CHECK(a.out == b.out);
  CHECK(has(a.out, "seed: 11"));
  CHECK(has(a.out, "== torus.bsc"));
  CHECK(has(a.out, "failures 2"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"validate", data("missing.bsc")}).code == 2);
  CHECK(run({"homology", "--coeff", "z7", data("torus.bsc")}).code == 2);
  auto t = run({"--timings", "info", data("torus.bsc")});
  CHECK(t.code == 0);
  CHECK(has(t.err, "time: "));
  CHECK(has(t.out, "euler 0"));
}

TEST_CASE("input file parsers") {
  std::istringstream disks("# two disks\ndisk 0 1 2 0 2 3\n\ndisk 4 5 6\n");
  auto d = parse_disks(disks);
  CHECK(d.size() == 2);
  CHECK(d[0].size() == 2);
  std::istringstream bad_disk("disk 0 1\n");
  CHECK_THROWS_WITH_AS(parse_disks(bad_disk), doctest::Contains("ParseError"), Error);

  std::istringstream assign("v 1 5\nv 0 4\n");
  CHECK(parse_assignment(assign, 2) == std::vector<Vertex>{4, 5});
  std::istringstream gap("v 0 4\n");
  CHECK_THROWS_WITH_AS(parse_assignment(gap, 2), doctest::Contains("no image"), Error);

  auto host = validate_branched_surface(barycentric_subdivide(octahedron()));
  std::istringstream spec("circle 6 18 7 20 8 21 9 19\npatch nonorientable 1 1\nglue 0 reversed\n");
  auto s = parse_attachment_spec(spec, host);
  CHECK(s.circles.size() == 1);
  CHECK_FALSE(s.patch.orientable);
  CHECK(s.patch.boundaries[0].size() == 8);
  CHECK(s.directions == std::vector<GlueDirection>{GlueDirection::Reversed});
  std::istringstream mismatch("circle 6 18 7\npatch orientable 0 2\n");
  CHECK_THROWS_WITH_AS(parse_attachment_spec(mismatch, host), doctest::Contains("boundaries"), Error);
}
