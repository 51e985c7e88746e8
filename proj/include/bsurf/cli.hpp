#pragma once

#include "bsurf/branch.hpp"
#include "bsurf/surgery.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bsurf {

/// 64-bit FNV-1a, printed as 16 hex digits.
std::uint64_t fnv1a(std::string_view bytes);
std::string fnv1a_hex(std::string_view bytes);

/// `circle v0 v1 ...`, `patch orientable|nonorientable <genus> <boundaries>`,
/// `glue <j> aligned|reversed`. Patch boundary lengths follow the circles.
/// Throws ParseError.
AttachmentSpec parse_attachment_spec(std::istream& in, const BranchedSurface& host);

/// One `disk a b c [a b c ...]` line per disk, listing its triangles.
std::vector<std::vector<Triangle>> parse_disks(std::istream& in);

/// `v <source> <target>` lines covering every source vertex once.
std::vector<Vertex> parse_assignment(std::istream& in, int source_vertices);

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitUsage = 2 };

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bsurf
