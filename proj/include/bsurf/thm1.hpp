#pragma once

#include "bsurf/surgery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bsurf {

enum class Verdict { Match, Fail, NoPrediction, Inconclusive };

const char* verdict_name(Verdict v); // "MATCH", "FAIL", "NO PREDICTION", "INCONCLUSIVE"

struct Thm1Item {
  std::string name;
  Verdict verdict = Verdict::NoPrediction;
  std::string detail;
};

/// Triangles of an embedded disk in the manifold part bounded by `loop`, if
/// one side of the loop is such a disk.
std::optional<std::vector<Triangle>> spanning_disk(const BranchedSurface& surface, const std::vector<Vertex>& loop);

/// Explicit cycles and cocycles on the attached surface.
struct Thm1Generators {
  std::vector<std::vector<Vertex>> bridge_loops; // l - 1 closed walks, bridge j + 1 joins T_0 and T_{j+1}
  std::vector<std::vector<Int>> bridges;         // their edge chains
  std::vector<std::vector<Int>> bridge_duals;    // 1-cocycles, dual j is 1 on bridge j and 0 on the others
};

/// Bridge cycles and their dual cocycles for an attachment result. Paths are
/// shortest edge paths found by breadth-first search with ascending neighbors.
Thm1Generators thm1_generators(const AttachmentResult& attached);

struct Thm1Report {
  Coeff coeff = Coeff::Integers;
  int l = 0;
  bool host_connected = false;
  std::vector<bool> null_homologous;
  std::vector<bool> bounds_disk;
  bool patch_orientable = true;
  bool normal = true;
  int host_euler = 0;
  int patch_euler = 0;
  int euler = 0;
  HomologySummary host_homology;
  HomologySummary host_cohomology;
  HomologySummary homology;
  HomologySummary cohomology;
  std::optional<Thm1Prediction> prediction;
  std::string simplified_pi1;
  std::vector<Thm1Item> items;

  /// Hypotheses of the direct-sum statements for the report's coefficients.
  bool hypotheses_hold() const;
  std::vector<std::string> failed_hypotheses() const;
  const Thm1Item* find(const std::string& name) const;
  /// No item failed.
  bool all_match() const;
  std::string to_string() const;
};

/// Attaches, computes and compares. Hypothesis failures are reported in the
/// result, not thrown; attachment errors propagate.
Thm1Report check_thm1(const AttachmentSpec& spec, Coeff coeff);

} // namespace bsurf
