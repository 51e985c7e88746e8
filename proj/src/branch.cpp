#include "bsurf/branch.hpp"

#include "bsurf/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bsurf {

namespace {

[[noreturn]] void reject(const std::string& reason) { throw Error(ErrorCode::NotABranchedSurface, reason); }

std::string vtext(Vertex v) { return std::to_string(v); }

// Carries each triangle at edge {v, prev} around v to the triangle at edge
// {v, next} reached without crossing another branch edge. Result is indexed in
// the order of complex.edge_triangles(edge {v, prev}).
std::vector<int> sheet_transfer(const SimplicialComplex2& complex, Vertex v, Vertex prev, Vertex next) {
  const auto& start = complex.edge_triangles(*complex.edge_index(v, prev));
  std::vector<int> out;
  out.reserve(start.size());
  for (int t0 : start) {
    int t = t0;
    Vertex from = prev;
    for (int guard = 0;; ++guard) {
      if (guard > static_cast<int>(complex.vertex_triangles(v).size())) {
        reject("sheet walk around vertex " + vtext(v) + " does not close");
      }
      const auto& tri = complex.triangles()[t];
      Vertex x = -1;
      for (Vertex y : tri) {
        if (y != v && y != from) x = y;
      }
      if (x == next) break;
      int e = *complex.edge_index(v, x);
      if (complex.edge_degree(e) != 2) {
        reject("sheet around vertex " + vtext(v) + " meets branch edge {" + vtext(v) + "," + vtext(x) + "}");
      }
      const auto& pair = complex.edge_triangles(e);
      t = pair[0] == t ? pair[1] : pair[0];
      from = x;
    }
    out.push_back(t);
  }
  std::vector<int> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    reject("sheets merge at vertex " + vtext(v));
  }
  return out;
}

} // namespace

const char* circle_kind_name(CircleKind kind) { return kind == CircleKind::Collar ? "collar" : "tripod"; }

const char* monodromy_name(Monodromy m) { return m == Monodromy::Identity ? "identity" : "transposition"; }

bool BranchLocus::contains_vertex(Vertex v) const {
  for (const auto& c : circles) {
    if (std::find(c.cycle.begin(), c.cycle.end(), v) != c.cycle.end()) return true;
  }
  return false;
}

int BranchLocus::count(CircleKind kind) const {
  return static_cast<int>(std::count_if(circles.begin(), circles.end(), [&](const auto& c) { return c.kind == kind; }));
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 2) return cycle;
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

bool same_cycle(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return a.size() == b.size() && canonical_cycle(a) == canonical_cycle(b);
}

BranchLocus detect_branch_locus(const SimplicialComplex2& complex) {
  const int nv = complex.vertex_count();
  std::vector<std::vector<int>> bad_edges_at(nv);
  for (int e = 0; e < complex.edge_count(); ++e) {
    const int d = complex.edge_degree(e);
    const auto& ed = complex.edges()[e];
    if (d >= 4) {
      reject("edge {" + vtext(ed[0]) + "," + vtext(ed[1]) + "} lies in " + std::to_string(d) + " triangles");
    }
    if (d != 2) {
      bad_edges_at[ed[0]].push_back(e);
      bad_edges_at[ed[1]].push_back(e);
    }
  }
  for (Vertex v = 0; v < nv; ++v) {
    const auto n = bad_edges_at[v].size();
    if (n != 0 && n != 2) {
      reject("branch edges at vertex " + vtext(v) + " do not form disjoint circles (" + std::to_string(n) +
             " incident)");
    }
  }

  BranchLocus locus;
  std::vector<bool> visited(nv, false);
  for (Vertex v = 0; v < nv; ++v) {
    if (visited[v] || bad_edges_at[v].empty()) continue;
    std::vector<Vertex> cycle;
    const int degree = complex.edge_degree(bad_edges_at[v][0]);
    Vertex prev = -1;
    Vertex cur = v;
    while (!visited[cur]) {
      visited[cur] = true;
      cycle.push_back(cur);
      Vertex next = -1;
      for (int e : bad_edges_at[cur]) {
        if (complex.edge_degree(e) != degree) {
          reject("branch circle through vertex " + vtext(v) + " mixes collar and tripod edges");
        }
        const auto& ed = complex.edges()[e];
        Vertex other = ed[0] == cur ? ed[1] : ed[0];
        if (other != prev) {
          next = other;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
    BranchCircle circle;
    circle.kind = degree == 1 ? CircleKind::Collar : CircleKind::Tripod;
    circle.cycle = canonical_cycle(std::move(cycle));
    locus.circles.push_back(std::move(circle));
  }

  std::vector<int> kind_at(nv, -1);
  for (const auto& c : locus.circles) {
    for (Vertex v : c.cycle) kind_at[v] = static_cast<int>(c.kind);
  }
  for (Vertex v = 0; v < nv; ++v) {
    const LinkType link = classify_link(complex, v);
    const LinkType expected = kind_at[v] < 0                                     ? LinkType::Cycle
                              : kind_at[v] == static_cast<int>(CircleKind::Collar) ? LinkType::Path
                                                                                   : LinkType::Theta;
    if (link != expected) {
      reject("vertex " + vtext(v) + " has link " + link_type_name(link) + ", expected " + link_type_name(expected));
    }
  }
  return locus;
}

Monodromy tripod_monodromy(const SimplicialComplex2& complex, const BranchCircle& circle) {
  const auto& c = circle.cycle;
  const int k = static_cast<int>(c.size());
  const auto& germs = complex.edge_triangles(*complex.edge_index(c[0], c[1]));
  std::vector<int> position(germs.size());
  for (std::size_t g = 0; g < germs.size(); ++g) position[g] = static_cast<int>(g);

  // Track where each germ at edge {c0,c1} travels after a full turn.
  for (int i = 0; i < k; ++i) {
    const Vertex prev = c[i];
    const Vertex v = c[(i + 1) % k];
    const Vertex next = c[(i + 2) % k];
    const auto& here = complex.edge_triangles(*complex.edge_index(v, prev));
    const auto& there = complex.edge_triangles(*complex.edge_index(v, next));
    if (here.size() != germs.size() || there.size() != germs.size()) {
      reject("sheet count changes along circle at vertex " + vtext(v));
    }
    const auto transfer = sheet_transfer(complex, v, prev, next);
    for (auto& p : position) {
      const int t = transfer[p];
      p = static_cast<int>(std::find(there.begin(), there.end(), t) - there.begin());
    }
  }
  int fixed = 0;
  for (std::size_t g = 0; g < position.size(); ++g) fixed += position[g] == static_cast<int>(g);
  if (fixed == static_cast<int>(position.size())) return Monodromy::Identity;
  if (position.size() == 3 && fixed == 1) return Monodromy::Transposition;
  if (position.size() == 3) {
    throw Error(ErrorCode::IllegalMonodromy,
                "sheets around circle at vertex " + vtext(c[0]) + " are permuted cyclically");
  }
  reject("collar around circle at vertex " + vtext(c[0]) + " is one-sided");
}

BranchedSurface validate_branched_surface(const SimplicialComplex2& complex) {
  BranchedSurface out;
  out.complex = complex;
  out.locus = detect_branch_locus(complex);
  for (auto& circle : out.locus.circles) {
    circle.monodromy = tripod_monodromy(complex, circle);
    if (circle.kind == CircleKind::Tripod && *circle.monodromy != Monodromy::Identity) out.normal = false;
  }
  return out;
}

} // namespace bsurf
