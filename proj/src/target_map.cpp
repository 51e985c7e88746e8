#include "bsurf/target_map.hpp"

#include "bsurf/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bsurf {

const char* vertex_model_kind_name(VertexModelKind k) {
  switch (k) {
  case VertexModelKind::Manifold: return "manifold";
  case VertexModelKind::Collar: return "collar";
  case VertexModelKind::Tripod: return "tripod";
  }
  return "?";
}

const char* local_model_verdict_name(LocalModelVerdict v) {
  switch (v) {
  case LocalModelVerdict::BornFromSSNS: return "born from an SSNS map";
  case LocalModelVerdict::LocallyBornOnly: return "locally born only";
  case LocalModelVerdict::Fail: return "fail";
  }
  return "?";
}

TargetSurfaceMap build_target_map(const BranchedSurface& source, const SimplicialComplex2& target,
                                  std::vector<Vertex> assignment) {
  if (static_cast<int>(assignment.size()) != source.complex.vertex_count()) {
    throw Error(ErrorCode::InvalidParameters, "assignment has " + std::to_string(assignment.size()) +
                                                  " entries, source has " +
                                                  std::to_string(source.complex.vertex_count()) + " vertices");
  }
  TargetSurfaceMap out;
  for (Vertex v = 0; v < target.vertex_count(); ++v) {
    const LinkType t = classify_link(target, v);
    if (t == LinkType::Path) {
      out.frame.insert(v);
    } else if (t != LinkType::Cycle) {
      throw Error(ErrorCode::InvalidParameters, "target is not a surface at vertex " + std::to_string(v));
    }
  }
  for (Vertex v = 0; v < static_cast<Vertex>(assignment.size()); ++v) {
    const Vertex w = assignment[v];
    if (w < 0 || w >= target.vertex_count()) {
      throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " maps to " + std::to_string(w));
    }
    if (out.frame.count(w)) {
      throw Error(ErrorCode::InvalidParameters, "vertex " + std::to_string(v) + " maps onto the frame");
    }
  }
  for (const auto& t : source.complex.triangles()) {
    const Vertex a = assignment[t[0]], b = assignment[t[1]], c = assignment[t[2]];
    if (a == b || b == c || a == c) {
      throw Error(ErrorCode::DegenerateImageTriangle, "triangle (" + std::to_string(t[0]) + "," +
                                                          std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    }
    if (!target.triangle_index(a, b, c)) {
      throw Error(ErrorCode::NotSimplicial, "image of (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                                std::to_string(t[2]) + ") is not a target triangle");
    }
  }
  out.source = source;
  out.target = target;
  out.assignment = std::move(assignment);
  return out;
}

namespace {

bool injective_on(const std::vector<Vertex>& assignment, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> img;
  for (Vertex v : vertices) img.push_back(assignment[v]);
  std::sort(img.begin(), img.end());
  return std::adjacent_find(img.begin(), img.end()) == img.end();
}

// The three paths from p to q in a theta-shaped link, interior vertices only.
std::vector<std::vector<Vertex>> theta_sheets(const LinkGraph& g, Vertex p, Vertex q) {
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto [a, b] : g.arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<Vertex>> out;
  for (Vertex start : adj[p]) {
    std::vector<Vertex> path;
    Vertex prev = p;
    Vertex cur = start;
    while (cur != q) {
      path.push_back(cur);
      const auto& nb = adj[cur];
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(path));
  }
  return out;
}

VertexModel tripod_model(const TargetSurfaceMap& map, Vertex v, Vertex p, Vertex q) {
  VertexModel m;
  m.vertex = v;
  m.kind = VertexModelKind::Tripod;
  const auto& c = map.assignment;
  if (c[p] == c[q]) {
    m.ok = false;
    m.reason = "branch circle folds back at vertex " + std::to_string(v);
    return m;
  }
  const auto sheets = theta_sheets(link_graph(map.source.complex, v), p, q);
  // Split the target link of c(v) at c(p) and c(q).
  const std::vector<Vertex> ring = link_cycle(map.target, c[v]);
  const int n = static_cast<int>(ring.size());
  const int ip = static_cast<int>(std::find(ring.begin(), ring.end(), c[p]) - ring.begin());
  const int iq = static_cast<int>(std::find(ring.begin(), ring.end(), c[q]) - ring.begin());
  std::map<Vertex, int> side;
  for (int k = (ip + 1) % n; k != iq; k = (k + 1) % n) side[ring[k]] = 0;
  for (int k = (iq + 1) % n; k != ip; k = (k + 1) % n) side[ring[k]] = 1;
  const bool empty0 = (ip + 1) % n == iq;
  int counts[2] = {0, 0};
  for (int s = 0; s < static_cast<int>(sheets.size()); ++s) {
    std::vector<Vertex> sheet = sheets[s];
    sheet.push_back(v);
    sheet.push_back(p);
    sheet.push_back(q);
    if (!injective_on(c, sheet)) {
      m.ok = false;
      m.reason = "sheet " + std::to_string(s) + " at vertex " + std::to_string(v) + " is not injective";
      return m;
    }
    ++counts[sheets[s].empty() ? (empty0 ? 0 : 1) : side.at(c[sheets[s].front()])];
  }
  m.sheets_on_first_side = std::min(counts[0], counts[1]);
  m.sheets_on_second_side = std::max(counts[0], counts[1]);
  if (m.sheets_on_first_side != 1 || m.sheets_on_second_side != 2) {
    m.ok = false;
    m.reason = "sheets at vertex " + std::to_string(v) + " split (" + std::to_string(counts[0]) + "|" +
               std::to_string(counts[1]) + ")";
  }
  return m;
}

} // namespace

int LocalModelReport::count(VertexModelKind kind) const {
  return static_cast<int>(
      std::count_if(vertices.begin(), vertices.end(), [&](const VertexModel& m) { return m.kind == kind; }));
}

bool LocalModelReport::tripods_split_one_two() const {
  return std::all_of(vertices.begin(), vertices.end(), [](const VertexModel& m) {
    return m.kind != VertexModelKind::Tripod || (m.sheets_on_first_side == 1 && m.sheets_on_second_side == 2);
  });
}

std::string LocalModelReport::to_string() const {
  std::ostringstream os;
  os << "local models: " << local_model_verdict_name(verdict) << "\n";
  os << "vertices: " << count(VertexModelKind::Manifold) << " manifold, " << count(VertexModelKind::Collar)
     << " collar, " << count(VertexModelKind::Tripod) << " tripod\n";
  if (!reason.empty()) os << "reason: " << reason << "\n";
  return os.str();
}

LocalModelReport validate_local_models(const TargetSurfaceMap& map) {
  const SimplicialComplex2& s = map.source.complex;
  std::vector<int> circle_of(s.vertex_count(), -1);
  std::vector<std::pair<Vertex, Vertex>> along(s.vertex_count());
  const auto& circles = map.source.locus.circles;
  for (int k = 0; k < static_cast<int>(circles.size()); ++k) {
    const auto& cyc = circles[k].cycle;
    const int n = static_cast<int>(cyc.size());
    for (int i = 0; i < n; ++i) {
      circle_of[cyc[i]] = k;
      along[cyc[i]] = {cyc[(i + n - 1) % n], cyc[(i + 1) % n]};
    }
  }
  LocalModelReport report;
  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    VertexModel m;
    if (circle_of[v] >= 0 && circles[circle_of[v]].kind == CircleKind::Tripod) {
      m = tripod_model(map, v, along[v].first, along[v].second);
    } else {
      m.vertex = v;
      m.kind = circle_of[v] >= 0 ? VertexModelKind::Collar : VertexModelKind::Manifold;
      std::vector<Vertex> star = s.neighbors(v);
      star.push_back(v);
      if (!injective_on(map.assignment, star)) {
        m.ok = false;
        m.reason = "star of " + std::string(vertex_model_kind_name(m.kind)) + " vertex " + std::to_string(v) +
                   " is not injective";
      }
    }
    if (!m.ok && report.reason.empty()) report.reason = m.reason;
    report.vertices.push_back(std::move(m));
  }
  if (!report.reason.empty()) {
    report.verdict = LocalModelVerdict::Fail;
  } else {
    report.verdict = map.source.normal ? LocalModelVerdict::BornFromSSNS : LocalModelVerdict::LocallyBornOnly;
  }
  return report;
}

std::optional<int> image_complement_witness(const TargetSurfaceMap& map) {
  std::vector<bool> hit(map.target.triangle_count(), false);
  for (const auto& t : map.source.complex.triangles()) {
    if (auto k = map.target.triangle_index(map.assignment[t[0]], map.assignment[t[1]], map.assignment[t[2]])) {
      hit[*k] = true;
    }
  }
  for (int k = 0; k < map.target.triangle_count(); ++k) {
    if (!hit[k]) return k;
  }
  return std::nullopt;
}

TargetSurfaceMap validate_attached_map(const TargetSurfaceMap& map, const AttachmentSpec& spec,
                                       const std::vector<Vertex>& patch_assignment) {
  if (!(spec.host.complex == map.source.complex)) {
    throw Error(ErrorCode::InvalidParameters, "attachment host differs from the map source");
  }
  const SimplicialComplex2& p = spec.patch.triangulation;
  if (static_cast<int>(patch_assignment.size()) != p.vertex_count()) {
    throw Error(ErrorCode::InvalidParameters, "patch assignment has the wrong size");
  }
  const int l = static_cast<int>(spec.circles.size());
  if (static_cast<int>(spec.patch.boundaries.size()) != l) {
    throw Error(ErrorCode::InvalidParameters, "patch boundary count differs from the circle count");
  }
  for (int j = 0; j < l; ++j) {
    const auto& boundary = spec.patch.boundaries[j];
    const auto& circle = spec.circles[j];
    const int len = static_cast<int>(boundary.size());
    if (static_cast<int>(circle.size()) != len) {
      throw Error(ErrorCode::InvalidParameters, "circle " + std::to_string(j) + " and its boundary differ in length");
    }
    const bool reversed = !spec.directions.empty() && spec.directions[j] == GlueDirection::Reversed;
    for (int i = 0; i < len; ++i) {
      const Vertex h = circle[reversed ? (len - i) % len : i];
      if (patch_assignment[boundary[i]] != map.assignment[h]) {
        throw Error(ErrorCode::BoundaryMismatch, "boundary " + std::to_string(j) + " vertex " +
                                                     std::to_string(boundary[i]) + " maps to " +
                                                     std::to_string(patch_assignment[boundary[i]]) + ", circle vertex " +
                                                     std::to_string(h) + " maps to " +
                                                     std::to_string(map.assignment[h]));
      }
    }
  }
  const AttachmentResult attached = attach_surface(spec);
  std::vector<Vertex> combined(attached.surface.complex.vertex_count(), -1);
  std::copy(map.assignment.begin(), map.assignment.end(), combined.begin());
  for (Vertex v = 0; v < p.vertex_count(); ++v) combined[attached.patch_to_result[v]] = patch_assignment[v];
  TargetSurfaceMap out = build_target_map(attached.surface, map.target, std::move(combined));
  const LocalModelReport report = validate_local_models(out);
  if (report.verdict == LocalModelVerdict::Fail) throw Error(ErrorCode::LocalModelFail, report.reason);
  return out;
}

} // namespace bsurf
