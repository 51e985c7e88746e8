#include "bsurf/cli.hpp"

#include "bsurf/bsc_io.hpp"
#include "bsurf/error.hpp"
#include "bsurf/homology.hpp"
#include "bsurf/pi1.hpp"
#include "bsurf/reeb.hpp"
#include "bsurf/surfaces.hpp"
#include "bsurf/target_map.hpp"
#include "bsurf/thm1.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace bsurf {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fnv1a_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

int to_int(const std::string& tok, int line_no) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
}

} // namespace

AttachmentSpec parse_attachment_spec(std::istream& in, const BranchedSurface& host) {
  AttachmentSpec spec;
  spec.host = host;
  bool have_patch = false;
  bool orientable = true;
  int genus = 0;
  int boundaries = 0;
  std::map<int, GlueDirection> glue;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "circle") {
      std::vector<Vertex> c;
      for (std::size_t i = 1; i < tok.size(); ++i) c.push_back(to_int(tok[i], line_no));
      if (c.size() < 3) throw Error(ErrorCode::ParseError, where + "a circle needs at least three vertices");
      spec.circles.push_back(std::move(c));
    } else if (tok[0] == "patch") {
      if (tok.size() != 4 || (tok[1] != "orientable" && tok[1] != "nonorientable") || have_patch) {
        throw Error(ErrorCode::ParseError, where + "expected one 'patch orientable|nonorientable <genus> <boundaries>'");
      }
      have_patch = true;
      orientable = tok[1] == "orientable";
      genus = to_int(tok[2], line_no);
      boundaries = to_int(tok[3], line_no);
    } else if (tok[0] == "glue") {
      if (tok.size() != 3 || (tok[2] != "aligned" && tok[2] != "reversed")) {
        throw Error(ErrorCode::ParseError, where + "expected 'glue <j> aligned|reversed'");
      }
      glue[to_int(tok[1], line_no)] = tok[2] == "aligned" ? GlueDirection::Aligned : GlueDirection::Reversed;
    } else {
      throw Error(ErrorCode::ParseError, where + "unknown keyword '" + tok[0] + "'");
    }
  }
  if (!have_patch) throw Error(ErrorCode::ParseError, "missing 'patch' line");
  if (boundaries != static_cast<int>(spec.circles.size())) {
    throw Error(ErrorCode::ParseError, "patch has " + std::to_string(boundaries) + " boundaries but " +
                                           std::to_string(spec.circles.size()) + " circles are listed");
  }
  std::vector<int> lengths;
  for (const auto& c : spec.circles) lengths.push_back(static_cast<int>(c.size()));
  spec.patch = make_surface(orientable, genus, boundaries, lengths);
  if (!glue.empty()) {
    spec.directions.assign(spec.circles.size(), GlueDirection::Aligned);
    for (auto [j, d] : glue) {
      if (j < 0 || j >= static_cast<int>(spec.circles.size())) {
        throw Error(ErrorCode::ParseError, "glue index " + std::to_string(j) + " out of range");
      }
      spec.directions[j] = d;
    }
  }
  return spec;
}

std::vector<std::vector<Triangle>> parse_disks(std::istream& in) {
  std::vector<std::vector<Triangle>> out;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0] != "disk" || tok.size() < 4 || (tok.size() - 1) % 3 != 0) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'disk a b c [a b c ...]'");
    }
    std::vector<Triangle> disk;
    for (std::size_t i = 1; i < tok.size(); i += 3) {
      disk.push_back(
          make_triangle(to_int(tok[i], line_no), to_int(tok[i + 1], line_no), to_int(tok[i + 2], line_no)));
    }
    out.push_back(std::move(disk));
  }
  return out;
}

std::vector<Vertex> parse_assignment(std::istream& in, int source_vertices) {
  std::vector<Vertex> out(source_vertices, -1);
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0] != "v" || tok.size() != 3) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'v <source> <target>'");
    }
    const int s = to_int(tok[1], line_no);
    const int t = to_int(tok[2], line_no);
    if (s < 0 || s >= source_vertices) throw Error(ErrorCode::ParseError, "source vertex " + std::to_string(s));
    if (out[s] >= 0) throw Error(ErrorCode::ParseError, "vertex " + std::to_string(s) + " assigned twice");
    out[s] = t;
  }
  for (int v = 0; v < source_vertices; ++v) {
    if (out[v] < 0) throw Error(ErrorCode::ParseError, "vertex " + std::to_string(v) + " has no image");
  }
  return out;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  bool oracle = false;
  bool timings = false;
};

// Plain-text report: header, body lines, closing verdict.
class Report {
public:
  Report(std::string command, const Globals& g) : command_(std::move(command)), globals_(g) {}

  void input(const std::string& path, const std::string& bytes) {
    inputs_.push_back(path + " fnv1a:" + fnv1a_hex(bytes));
  }
  std::ostringstream& body() { return body_; }
  void verdict(std::string v) { verdict_ = std::move(v); }

  void write(std::ostream& out) const {
    if (!globals_.quiet) {
      out << "command: " << command_ << "\n";
      for (const auto& i : inputs_) out << "input: " << i << "\n";
      if (globals_.seed) out << "seed: " << *globals_.seed << "\n";
      out << body_.str();
    }
    out << "verdict: " << verdict_ << "\n";
  }

private:
  std::string command_;
  const Globals& globals_;
  std::vector<std::string> inputs_;
  std::ostringstream body_;
  std::string verdict_ = "ok";
};

std::string slurp(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw UsageError("cannot read '" + path + "'");
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BscDocument load_bsc(const std::string& path, Report& report) {
  const std::string bytes = slurp(path);
  report.input(path, bytes);
  std::istringstream is(bytes);
  return parse_bsc(is);
}

std::istringstream load_text(const std::string& path, Report& report) {
  const std::string bytes = slurp(path);
  report.input(path, bytes);
  return std::istringstream(bytes);
}

Coeff coeff_option(const std::string& text) {
  auto c = parse_coeff(text);
  if (!c) throw UsageError("unknown coefficients '" + text + "' (use z, z2 or q)");
  return *c;
}

BscDocument document_of(const BranchedSurface& s) {
  BscDocument doc;
  doc.complex = s.complex;
  for (const auto& c : s.locus.circles) doc.branches.push_back({c.kind, c.cycle});
  return doc;
}

void write_locus(std::ostream& os, const BranchedSurface& s) {
  for (std::size_t i = 0; i < s.locus.circles.size(); ++i) {
    const auto& c = s.locus.circles[i];
    os << "circle " << i << ": " << circle_kind_name(c.kind) << ", length " << c.cycle.size();
    if (c.kind == CircleKind::Tripod && c.monodromy) os << ", monodromy " << monodromy_name(*c.monodromy);
    os << "\n";
  }
  os << "normal: " << (s.normal ? "yes" : "no") << "\n";
}

std::string surface_kind(const BranchedSurface& s) {
  if (s.locus.circles.empty()) return "closed surface";
  if (s.locus.count(CircleKind::Tripod) == 0) return "surface with boundary";
  return "branched surface";
}

void write_attachment(std::ostream& os, const AttachmentResult& r) {
  os << "euler: host " << euler_characteristic(r.host.complex) << ", patch "
     << euler_characteristic(r.patch.triangulation) << ", result " << euler_characteristic(r.surface.complex) << "\n";
  os << "subdivisions: host " << r.host_subdivisions << ", patch " << r.patch_subdivisions << "\n";
  os << "result: " << r.surface.complex.vertex_count() << " vertices, " << r.surface.complex.triangle_count()
     << " triangles, " << r.surface.locus.circles.size() << " branch circles\n";
  write_locus(os, r.surface);
}

struct Options {
  std::string file;
  std::string second;
  std::string coeff = "z";
  std::string spec;
  std::string disks;
  std::string assign;
  std::string patch_assign;
  std::string output;
  bool branched = false;
  bool orientable = false;
  bool nonorientable = false;
  int genus = 0;
  int boundaries = 0;
  int length = kDefaultBoundaryLength;
  std::vector<int> loop;
  std::string ambient = "orientable";
  std::vector<std::string> steps;
};

int cmd_validate(const Options& o, Report& r) {
  BscDocument doc = load_bsc(o.file, r);
  BranchedSurface s = validate_branched_surface(doc.complex);
  auto& os = r.body();
  os << surface_kind(s) << ", " << s.locus.circles.size() << " branch circles\n";
  write_locus(os, s);
  for (const auto& d : doc.branches) {
    bool found = false;
    for (const auto& c : s.locus.circles) found = found || (c.kind == d.kind && same_cycle(c.cycle, d.cycle));
    if (!found) {
      os << "declared " << circle_kind_name(d.kind) << " circle not found in the detected locus\n";
      r.verdict("invalid");
      return kExitInvalid;
    }
  }
  if (!doc.branches.empty() && doc.branches.size() != s.locus.circles.size()) {
    os << "declared locus has " << doc.branches.size() << " circles, detected " << s.locus.circles.size() << "\n";
    r.verdict("invalid");
    return kExitInvalid;
  }
  r.verdict("valid");
  return kExitOk;
}

int cmd_homology(const Options& o, Report& r, bool co) {
  const Coeff coeff = coeff_option(o.coeff);
  BscDocument doc = load_bsc(o.file, r);
  if (o.branched) validate_branched_surface(doc.complex);
  const HomologySummary h = co ? cohomology(doc.complex, coeff) : homology(doc.complex, coeff);
  auto& os = r.body();
  const char* name = co ? "H^" : "H";
  for (int k = 0; k <= 2; ++k) os << name << k << " = " << h.degree[k].to_string(coeff) << "\n";
  os << "euler: " << euler_characteristic(doc.complex) << "\n";
  return kExitOk;
}

int cmd_cup(const Options& o, Report& r) {
  const Coeff coeff = coeff_option(o.coeff);
  if (coeff == Coeff::Rationals) throw UsageError("cup supports z and z2");
  BscDocument doc = load_bsc(o.file, r);
  CupTable t = cup_product_h1(doc.complex, coeff);
  auto& os = r.body();
  os << "H^1 basis size: " << t.h1_size << "\nH^2 orders:";
  for (Int x : t.h2_orders) os << " " << x;
  os << "\n";
  for (int i = 0; i < t.h1_size; ++i) {
    for (int j = 0; j < t.h1_size; ++j) {
      os << "e" << i << " cup e" << j << " =";
      for (Int x : t.constants[i][j]) os << " " << x;
      os << "\n";
    }
  }
  os << "all zero: " << (t.all_zero() ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_pi1(const Options& o, Report& r) {
  BscDocument doc = load_bsc(o.file, r);
  auto& os = r.body();
  for (const auto& comp : connected_components(doc.complex)) {
    GroupPresentation p = edge_path_presentation(doc.complex, comp.front());
    os << "basepoint " << comp.front() << "\n";
    os << "presentation: " << p.to_string() << "\n";
    os << "simplified: " << tietze_simplify(p, default_tietze_budget(p)).to_string() << "\n";
    os << "abelianization: " << abelianization(p).to_string(Coeff::Integers) << "\n";
  }
  return kExitOk;
}

int cmd_cycle_class(const Options& o, Report& r) {
  const Coeff coeff = coeff_option(o.coeff);
  BscDocument doc = load_bsc(o.file, r);
  if (o.loop.empty()) throw UsageError("--loop is required");
  auto& os = r.body();
  auto cls = cycle_class(doc.complex, o.loop, coeff);
  os << "class:";
  for (Int x : cls) os << " " << x;
  os << "\n";
  const bool zero = is_null_homologous(doc.complex, o.loop, coeff);
  os << "null-homologous: " << (zero ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_make_surface(const Options& o, Report& r, std::ostream& out) {
  if (o.orientable && o.nonorientable) throw UsageError("choose one of --orientable and --nonorientable");
  const bool orientable = !o.nonorientable;
  CompactSurfaceModel s =
      make_surface(orientable, o.genus, o.boundaries, std::vector<int>(o.boundaries, o.length));
  BscDocument doc;
  doc.complex = s.triangulation;
  for (const auto& b : s.boundaries) doc.branches.push_back({CircleKind::Collar, canonical_cycle(b)});
  auto& os = r.body();
  os << (orientable ? "orientable" : "non-orientable") << " genus " << o.genus << ", " << o.boundaries
     << " boundaries\n";
  os << "vertices " << doc.complex.vertex_count() << ", triangles " << doc.complex.triangle_count() << ", euler "
     << euler_characteristic(doc.complex) << "\n";
  if (o.output.empty()) {
    r.write(out);
    write_bsc(out, doc);
    return -1;
  }
  write_bsc_file(o.output, doc);
  os << "written: " << o.output << "\n";
  return kExitOk;
}

BranchedSurface load_host(const Options& o, Report& r) { return validate_branched_surface(load_bsc(o.file, r).complex); }

AttachmentSpec load_spec(const Options& o, Report& r, const BranchedSurface& host) {
  if (!o.spec.empty() && !o.disks.empty()) throw UsageError("give either --spec or --disks");
  if (!o.spec.empty()) {
    auto in = load_text(o.spec, r);
    return parse_attachment_spec(in, host);
  }
  if (!o.disks.empty()) {
    auto in = load_text(o.disks, r);
    return bubble_spec(host, parse_disks(in));
  }
  throw UsageError("--spec or --disks is required");
}

int finish_attach(const Options& o, Report& r, const AttachmentResult& res) {
  write_attachment(r.body(), res);
  if (!o.output.empty()) {
    write_bsc_file(o.output, document_of(res.surface));
    r.body() << "written: " << o.output << "\n";
  }
  return kExitOk;
}

int cmd_attach(const Options& o, Report& r) {
  if (o.spec.empty()) throw UsageError("--spec is required");
  BranchedSurface host = load_host(o, r);
  return finish_attach(o, r, attach_surface(load_spec(o, r, host)));
}

int cmd_bubble(const Options& o, Report& r) {
  if (o.disks.empty()) throw UsageError("--disks is required");
  BranchedSurface host = load_host(o, r);
  return finish_attach(o, r, attach_surface(load_spec(o, r, host)));
}

int cmd_check_thm1(const Options& o, Report& r) {
  const Coeff coeff = coeff_option(o.coeff);
  BranchedSurface host = load_host(o, r);
  Thm1Report rep = check_thm1(load_spec(o, r, host), coeff);
  r.body() << rep.to_string();
  r.body() << "note: the free product claim is checked through abelianization and simplification only\n";
  const bool ok = rep.all_match();
  r.verdict(ok ? "all asserted items MATCH" : "FAIL");
  return ok ? kExitOk : kExitInvalid;
}

Orientability orientability_option(const std::string& text) {
  if (text == "orientable") return Orientability::Orientable;
  if (text == "nonorientable" || text == "non-orientable") return Orientability::NonOrientable;
  throw UsageError("expected orientable or nonorientable, got '" + text + "'");
}

int cmd_heegaard(const Options& o, Report& r) {
  if (o.steps.empty()) throw UsageError("at least one --step <l>[:orientable|nonorientable] is required");
  HeegaardLedger ledger;
  ledger.genus_bound = o.genus;
  ledger.ambient = orientability_option(o.ambient);
  for (const auto& step : o.steps) {
    const auto colon = step.find(':');
    int l = 0;
    try {
      l = std::stoi(step.substr(0, colon));
    } catch (const std::exception&) {
      throw UsageError("bad step '" + step + "'");
    }
    const Orientability target = colon == std::string::npos ? ledger.ambient : orientability_option(step.substr(colon + 1));
    ledger = apply_heegaard(ledger, l, target);
  }
  auto& os = r.body();
  os << "start: genus " << o.genus << ", " << orientability_name(orientability_option(o.ambient)) << "\n";
  for (const auto& h : ledger.history) {
    os << "step l=" << h.l << " " << orientability_name(h.target) << ": " << h.genus_before << " -> " << h.genus_after
       << "\n";
  }
  os << "genus bound: " << ledger.genus_bound << "\n";
  return kExitOk;
}

int cmd_map_validate(const Options& o, Report& r) {
  if (o.assign.empty()) throw UsageError("--assign is required");
  BranchedSurface source = validate_branched_surface(load_bsc(o.file, r).complex);
  BscDocument target = load_bsc(o.second, r);
  auto ain = load_text(o.assign, r);
  TargetSurfaceMap map = build_target_map(source, target.complex, parse_assignment(ain, source.complex.vertex_count()));
  auto& os = r.body();
  if (!o.spec.empty()) {
    if (o.patch_assign.empty()) throw UsageError("--patch-assign is required with --spec");
    AttachmentSpec spec = load_spec(o, r, source);
    auto pin = load_text(o.patch_assign, r);
    map = validate_attached_map(map, spec, parse_assignment(pin, spec.patch.triangulation.vertex_count()));
    os << "attached map accepted\n";
  }
  LocalModelReport rep = validate_local_models(map);
  os << "local injectivity on stars stands in for immersion\n";
  os << rep.to_string();
  for (const auto& v : rep.vertices) {
    if (v.kind != VertexModelKind::Tripod) continue;
    os << "tripod vertex " << v.vertex << ": ";
    if (v.ok) {
      os << "(" << v.sheets_on_first_side << "|" << v.sheets_on_second_side << ")\n";
    } else {
      os << v.reason << "\n";
    }
  }
  if (auto w = image_complement_witness(map)) {
    const auto& t = map.target.triangles()[*w];
    os << "image complement witness: triangle " << t[0] << " " << t[1] << " " << t[2] << "\n";
  } else {
    os << "image complement: empty\n";
  }
  r.verdict(local_model_verdict_name(rep.verdict));
  return rep.verdict == LocalModelVerdict::Fail ? kExitInvalid : kExitOk;
}

int cmd_reeb(const Options& o, Report& r, bool oracle) {
  BscDocument doc = load_bsc(o.file, r);
  const auto values = doc.function_values();
  if (values.empty()) throw Error(ErrorCode::ParseError, "no 'function' lines in " + o.file);
  ReebGraph g = reeb_graph(doc.complex, values);
  r.body() << g.to_string();
  if (oracle) {
    const bool agree = reeb_isomorphic(g, reeb_graph_by_slices(doc.complex, values));
    r.body() << "oracle: " << (agree ? "agrees" : "disagrees") << "\n";
    if (!agree) {
      r.verdict("oracle mismatch");
      return kExitInvalid;
    }
  }
  return kExitOk;
}

void write_info(std::ostream& os, const SimplicialComplex2& c) {
  os << "vertices " << c.vertex_count() << "\nedges " << c.edge_count() << "\ntriangles " << c.triangle_count()
     << "\neuler " << euler_characteristic(c) << "\ncomponents " << connected_components(c).size() << "\n";
  std::map<std::string, int> links;
  for (Vertex v = 0; v < c.vertex_count(); ++v) ++links[link_type_name(classify_link(c, v))];
  os << "links";
  for (auto& [name, n] : links) os << " " << name << ":" << n;
  os << "\nclosed surface: " << (is_closed_surface(c) ? "yes" : "no") << "\n";
}

int cmd_info(const Options& o, Report& r) {
  BscDocument doc = load_bsc(o.file, r);
  write_info(r.body(), doc.complex);
  r.body() << "branch declarations " << doc.branches.size() << "\nfunction values " << doc.function.size() << "\n";
  return kExitOk;
}

int cmd_batch(const Options& o, Report& r) {
  if (!std::filesystem::is_directory(o.file)) throw UsageError("'" + o.file + "' is not a directory");
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(o.file)) {
    if (e.is_regular_file() && e.path().extension() == ".bsc") files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  int failures = 0;
  auto& os = r.body();
  for (const auto& f : files) {
    os << "== " << std::filesystem::path(f).filename().string() << "\n";
    try {
      const std::string bytes = slurp(f);
      os << "fnv1a:" << fnv1a_hex(bytes) << "\n";
      std::istringstream is(bytes);
      BscDocument doc = parse_bsc(is);
      write_info(os, doc.complex);
      BranchedSurface s = validate_branched_surface(doc.complex);
      os << surface_kind(s) << ", " << s.locus.circles.size() << " branch circles\n";
      write_locus(os, s);
      os << "H1(Z) = " << homology(doc.complex, Coeff::Integers).degree[1].to_string(Coeff::Integers) << "\n";
    } catch (const Error& e) {
      ++failures;
      os << "error: " << e.what() << "\n";
    }
  }
  os << "files " << files.size() << ", failures " << failures << "\n";
  if (failures) r.verdict(std::to_string(failures) + " invalid");
  return failures ? kExitInvalid : kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branched surfaces: validation, homology, surgery and checks", "bsurf"};
  app.require_subcommand(1);
  Globals g;
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "Seed recorded in reports");
  app.add_flag("--quiet", g.quiet, "Print only the verdict line");
  app.add_flag("--oracle", g.oracle, "Run the brute-force cross-check where available");
  app.add_flag("--timings", g.timings, "Print elapsed time on the error stream");
  app.fallthrough();

  Options o;
  auto coeff = [&](CLI::App* s) { s->add_option("--coeff", o.coeff, "z, z2 or q"); };
  auto file = [&](CLI::App* s, const char* what = "BSC file") { s->add_option("file", o.file, what)->required(); };

  auto* validate = app.add_subcommand("validate", "Validate a branched surface");
  file(validate);
  auto* hom = app.add_subcommand("homology", "Homology groups");
  file(hom);
  coeff(hom);
  hom->add_flag("--branched", o.branched, "Validate as a branched surface first");
  auto* cohom = app.add_subcommand("cohomology", "Cohomology groups");
  file(cohom);
  coeff(cohom);
  cohom->add_flag("--branched", o.branched, "Validate as a branched surface first");
  auto* cup = app.add_subcommand("cup", "Cup product structure constants on H^1");
  file(cup);
  coeff(cup);
  auto* pi1 = app.add_subcommand("pi1", "Edge-path presentation of the fundamental group");
  file(pi1);
  auto* cc = app.add_subcommand("cycle-class", "Class of a vertex loop in H1");
  file(cc);
  coeff(cc);
  cc->add_option("--loop", o.loop, "Vertex loop")->expected(3, -1);
  auto* mk = app.add_subcommand("make-surface", "Write a triangulated compact surface");
  mk->add_flag("--orientable", o.orientable);
  mk->add_flag("--nonorientable", o.nonorientable);
  mk->add_option("--genus", o.genus, "Handles, or crosscaps when non-orientable")->check(CLI::NonNegativeNumber);
  mk->add_option("--boundaries", o.boundaries)->check(CLI::NonNegativeNumber);
  mk->add_option("--length", o.length, "Boundary loop length")->check(CLI::Range(3, 1 << 20));
  mk->add_option("-o,--output", o.output);
  auto* attach = app.add_subcommand("attach", "Attach a compact surface along circles");
  file(attach, "Host BSC file");
  attach->add_option("--spec", o.spec)->required();
  attach->add_option("-o,--output", o.output);
  auto* bubble = app.add_subcommand("bubble", "Attach a planar patch along disk boundaries");
  file(bubble, "Host BSC file");
  bubble->add_option("--disks", o.disks)->required();
  bubble->add_option("-o,--output", o.output);
  auto* thm1 = app.add_subcommand("check-thm1", "Compare computed invariants with the direct-sum predictions");
  file(thm1, "Host BSC file");
  coeff(thm1);
  thm1->add_option("--spec", o.spec);
  thm1->add_option("--disks", o.disks);
  auto* heeg = app.add_subcommand("heegaard", "Heegaard genus bound ledger");
  heeg->add_option("--genus", o.genus, "Starting genus bound")->check(CLI::NonNegativeNumber);
  heeg->add_option("--ambient", o.ambient, "orientable or nonorientable");
  heeg->add_option("--step", o.steps, "l[:orientable|nonorientable]");
  auto* mv = app.add_subcommand("map-validate", "Check local models of a map to a surface");
  file(mv, "Source BSC file");
  mv->add_option("target", o.second, "Target BSC file")->required();
  mv->add_option("--assign", o.assign)->required();
  mv->add_option("--spec", o.spec, "Attachment spec for an attached map");
  mv->add_option("--patch-assign", o.patch_assign, "Patch vertex assignment");
  auto* reeb = app.add_subcommand("reeb", "Reeb graph of the function in a BSC file");
  file(reeb);
  auto* info = app.add_subcommand("info", "Counts and link types");
  file(info);
  auto* batch = app.add_subcommand("batch", "Validate every .bsc file in a directory");
  file(batch, "Directory");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (*seed_opt) g.seed = seed;

  CLI::App* sub = app.get_subcommands().front();
  Report report(sub->get_name(), g);
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    const std::string name = sub->get_name();
    if (name == "validate") code = cmd_validate(o, report);
    else if (name == "homology") code = cmd_homology(o, report, false);
    else if (name == "cohomology") code = cmd_homology(o, report, true);
    else if (name == "cup") code = cmd_cup(o, report);
    else if (name == "pi1") code = cmd_pi1(o, report);
    else if (name == "cycle-class") code = cmd_cycle_class(o, report);
    else if (name == "make-surface") code = cmd_make_surface(o, report, out);
    else if (name == "attach") code = cmd_attach(o, report);
    else if (name == "bubble") code = cmd_bubble(o, report);
    else if (name == "check-thm1") code = cmd_check_thm1(o, report);
    else if (name == "heegaard") code = cmd_heegaard(o, report);
    else if (name == "map-validate") code = cmd_map_validate(o, report);
    else if (name == "reeb") code = cmd_reeb(o, report, g.oracle);
    else if (name == "info") code = cmd_info(o, report);
    else if (name == "batch") code = cmd_batch(o, report);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    report.body() << "error: " << e.what() << "\n";
    report.verdict(std::string(error_code_name(e.code())));
    code = kExitInvalid;
  }
  if (code >= 0) report.write(out);
  else code = kExitOk;
  if (g.timings) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    err << "time: " << ms << " ms\n";
  }
  return code;
}

} // namespace bsurf
