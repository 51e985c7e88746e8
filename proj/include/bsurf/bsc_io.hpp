#pragma once

#include "bsurf/branch.hpp"
#include "bsurf/complex.hpp"
#include "bsurf/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bsurf {

struct BranchDeclaration {
  CircleKind kind = CircleKind::Collar;
  std::vector<Vertex> cycle;
};

struct FunctionValue {
  Vertex vertex = 0;
  Rational value;
};

/// Contents of a BSC v1 file.
struct BscDocument {
  SimplicialComplex2 complex;
  std::vector<BranchDeclaration> branches;
  std::vector<FunctionValue> function;

  /// Per-vertex values, or empty when the file carries no `function` lines.
  /// Throws ParseError when some vertex has no value or a value twice.
  std::vector<Rational> function_values() const;
};

BscDocument parse_bsc(std::istream& in);
BscDocument read_bsc_file(const std::string& path);

/// Canonical serialization: header, vertex count, triangles in canonical
/// order, then branch and function lines in stored order.
void write_bsc(std::ostream& out, const BscDocument& doc);
void write_bsc_file(const std::string& path, const BscDocument& doc);
std::string to_bsc_string(const BscDocument& doc);

} // namespace bsurf
