#include "bsurf/bsc_io.hpp"

#include "bsurf/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bsurf {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int parse_index(const std::string& tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
  }
  return value;
}

} // namespace

std::vector<Rational> BscDocument::function_values() const {
  if (function.empty()) return {};
  std::vector<Rational> values(complex.vertex_count());
  std::vector<bool> seen(complex.vertex_count(), false);
  for (const auto& fv : function) {
    if (fv.vertex < 0 || fv.vertex >= complex.vertex_count()) {
      throw Error(ErrorCode::ParseError, "function value for unknown vertex " + std::to_string(fv.vertex));
    }
    if (seen[fv.vertex]) {
      throw Error(ErrorCode::ParseError, "vertex " + std::to_string(fv.vertex) + " has two function values");
    }
    seen[fv.vertex] = true;
    values[fv.vertex] = fv.value;
  }
  for (Vertex v = 0; v < complex.vertex_count(); ++v) {
    if (!seen[v]) throw Error(ErrorCode::ParseError, "vertex " + std::to_string(v) + " has no function value");
  }
  return values;
}

BscDocument parse_bsc(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool header = false;
  int vertex_count = -1;
  std::vector<Triangle> triangles;
  BscDocument doc;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!header) {
      if (tok.size() != 2 || tok[0] != "bsc" || tok[1] != "1") {
        throw Error(ErrorCode::ParseError, where + "expected header 'bsc 1'");
      }
      header = true;
      continue;
    }
    if (tok[0] == "vertices") {
      if (tok.size() != 2 || vertex_count >= 0) throw Error(ErrorCode::ParseError, where + "bad 'vertices' line");
      vertex_count = parse_index(tok[1], line_no);
      if (vertex_count < 0) throw Error(ErrorCode::ParseError, where + "negative vertex count");
    } else if (tok[0] == "triangle") {
      if (tok.size() != 4) throw Error(ErrorCode::ParseError, where + "triangle needs three indices");
      triangles.push_back(
          {parse_index(tok[1], line_no), parse_index(tok[2], line_no), parse_index(tok[3], line_no)});
    } else if (tok[0] == "branch") {
      if (tok.size() < 5 || (tok[1] != "collar" && tok[1] != "tripod")) {
        throw Error(ErrorCode::ParseError, where + "expected 'branch collar|tripod v0 v1 v2 ...'");
      }
      BranchDeclaration decl;
      decl.kind = tok[1] == "collar" ? CircleKind::Collar : CircleKind::Tripod;
      for (std::size_t i = 2; i < tok.size(); ++i) decl.cycle.push_back(parse_index(tok[i], line_no));
      doc.branches.push_back(std::move(decl));
    } else if (tok[0] == "function") {
      if (tok.size() != 3) throw Error(ErrorCode::ParseError, where + "expected 'function <v> <value>'");
      doc.function.push_back({parse_index(tok[1], line_no), Rational::parse(tok[2])});
    } else {
      throw Error(ErrorCode::ParseError, where + "unknown keyword '" + tok[0] + "'");
    }
    if (vertex_count < 0 && tok[0] != "vertices") {
      throw Error(ErrorCode::ParseError, where + "'vertices' must precede other records");
    }
  }
  if (!header) throw Error(ErrorCode::ParseError, "missing header 'bsc 1'");
  if (vertex_count < 0) throw Error(ErrorCode::ParseError, "missing 'vertices' line");
  doc.complex = build_complex(std::move(triangles), vertex_count);
  return doc;
}

BscDocument read_bsc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_bsc(in);
}

void write_bsc(std::ostream& out, const BscDocument& doc) {
  out << "bsc 1\n";
  out << "vertices " << doc.complex.vertex_count() << "\n";
  for (const auto& t : doc.complex.triangles()) {
    out << "triangle " << t[0] << " " << t[1] << " " << t[2] << "\n";
  }
  for (const auto& b : doc.branches) {
    out << "branch " << circle_kind_name(b.kind);
    for (Vertex v : b.cycle) out << " " << v;
    out << "\n";
  }
  for (const auto& f : doc.function) {
    out << "function " << f.vertex << " " << f.value.to_string() << "\n";
  }
}

void write_bsc_file(const std::string& path, const BscDocument& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  write_bsc(out, doc);
}

std::string to_bsc_string(const BscDocument& doc) {
  std::ostringstream ss;
  write_bsc(ss, doc);
  return ss.str();
}

} // namespace bsurf
