#include "bsurf/pi1.hpp"

#include "bsurf/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace bsurf {

namespace {

constexpr std::size_t kMaxTotalLength = 200000;

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::size_t total_length(const std::vector<Word>& words) {
  std::size_t n = 0;
  for (const auto& w : words) n += w.size();
  return n;
}

} // namespace

std::string GroupPresentation::to_string() const {
  std::string out = "<";
  for (int g = 1; g <= generators; ++g) out += (g > 1 ? ", x" : " x") + std::to_string(g);
  out += " |";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    out += r ? ", " : " ";
    if (relators[r].empty()) out += "1";
    for (std::size_t i = 0; i < relators[r].size(); ++i) {
      int x = relators[r][i];
      out += (i ? " x" : "x") + std::to_string(std::abs(x));
      if (x < 0) out += "^-1";
    }
  }
  out += " >";
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

EdgePathData edge_path_data(const SimplicialComplex2& complex, Vertex basepoint) {
  if (basepoint < 0 || basepoint >= complex.vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "basepoint " + std::to_string(basepoint));
  }
  if (connected_components(complex).size() != 1) {
    throw Error(ErrorCode::NotConnected, "edge-path group needs a connected complex");
  }
  EdgePathData data;
  data.basepoint = basepoint;
  data.tree_edge.assign(complex.edge_count(), false);
  std::vector<bool> seen(complex.vertex_count(), false);
  std::deque<Vertex> queue{basepoint};
  seen[basepoint] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : complex.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      data.tree_edge[*complex.edge_index(v, w)] = true;
      queue.push_back(w);
    }
  }
  std::vector<int> letter(complex.edge_count(), 0);
  for (int e = 0; e < complex.edge_count(); ++e) {
    if (data.tree_edge[e]) continue;
    data.generator_edge.push_back(e);
    letter[e] = static_cast<int>(data.generator_edge.size());
  }
  data.presentation.generators = static_cast<int>(data.generator_edge.size());
  for (const auto& [a, b, c] : complex.triangles()) {
    Word w;
    if (int x = letter[*complex.edge_index(a, b)]) w.push_back(x);
    if (int x = letter[*complex.edge_index(b, c)]) w.push_back(x);
    if (int x = letter[*complex.edge_index(a, c)]) w.push_back(-x);
    data.presentation.relators.push_back(free_reduce(w));
  }
  return data;
}

GroupPresentation edge_path_presentation(const SimplicialComplex2& complex, Vertex basepoint) {
  return edge_path_data(complex, basepoint).presentation;
}

AbelianGroup abelianization(const GroupPresentation& p) {
  IntMatrix m(static_cast<int>(p.relators.size()), p.generators);
  for (int r = 0; r < m.rows(); ++r) {
    for (int x : p.relators[r]) m(r, std::abs(x) - 1) += x > 0 ? 1 : -1;
  }
  std::vector<Int> factors = invariant_factors(m);
  return AbelianGroup::make(p.generators - static_cast<int>(factors.size()), factors);
}

int default_tietze_budget(const GroupPresentation& p) { return 10 * static_cast<int>(p.relators.size()); }

GroupPresentation tietze_simplify(const GroupPresentation& p, int step_budget) {
  int generators = p.generators;
  std::vector<Word> relators = p.relators;
  int steps = 0;
  for (;;) {
    std::vector<Word> kept;
    for (auto& r : relators) {
      Word c = cyclic_reduce(r);
      if (!c.empty()) kept.push_back(std::move(c));
    }
    relators = std::move(kept);
    if (steps >= step_budget) break;

    std::vector<int> order(relators.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return relators[a].size() < relators[b].size(); });
    int chosen = -1;
    std::size_t position = 0;
    for (int ri : order) {
      const Word& r = relators[ri];
      std::vector<int> count(generators + 1, 0);
      for (int x : r) ++count[std::abs(x)];
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (count[std::abs(r[i])] == 1) {
          chosen = ri;
          position = i;
          break;
        }
      }
      if (chosen >= 0) break;
    }
    if (chosen < 0) break;

    // r = u x^e w = 1 gives x = u^-1 w^-1 (e = 1) or x = w u (e = -1).
    const Word r = relators[chosen];
    const int letter = r[position];
    const int x = std::abs(letter);
    Word u(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(position));
    Word w(r.begin() + static_cast<std::ptrdiff_t>(position) + 1, r.end());
    Word replacement;
    if (letter > 0) {
      replacement = inverse_word(u);
      Word wi = inverse_word(w);
      replacement.insert(replacement.end(), wi.begin(), wi.end());
    } else {
      replacement = w;
      replacement.insert(replacement.end(), u.begin(), u.end());
    }
    replacement = free_reduce(replacement);
    const Word replacement_inv = inverse_word(replacement);

    auto renumber = [x](int y) { return std::abs(y) > x ? (y > 0 ? y - 1 : y + 1) : y; };
    std::vector<Word> next;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      if (static_cast<int>(i) == chosen) continue;
      Word out;
      for (int y : relators[i]) {
        if (std::abs(y) == x) {
          for (int z : y > 0 ? replacement : replacement_inv) out.push_back(renumber(z));
        } else {
          out.push_back(renumber(y));
        }
      }
      next.push_back(free_reduce(out));
    }
    if (total_length(next) > kMaxTotalLength) break;
    relators = std::move(next);
    --generators;
    ++steps;
  }
  return GroupPresentation{generators, relators};
}

} // namespace bsurf
