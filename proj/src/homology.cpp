#include "bsurf/homology.hpp"

#include "bsurf/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bsurf {

namespace {

Int mod_positive(Int x, Int m) { return ((x % m) + m) % m; }

void reduce_mod2(std::vector<Int>& v) {
  for (auto& x : v) x = mod_positive(x, 2);
}

} // namespace

const char* coeff_name(Coeff coeff) {
  switch (coeff) {
    case Coeff::Integers: return "Z";
    case Coeff::Mod2: return "Z/2";
    case Coeff::Rationals: return "Q";
  }
  return "Z";
}

std::optional<Coeff> parse_coeff(std::string_view text) {
  if (text == "z" || text == "Z") return Coeff::Integers;
  if (text == "z2" || text == "Z2" || text == "Z/2") return Coeff::Mod2;
  if (text == "q" || text == "Q") return Coeff::Rationals;
  return std::nullopt;
}

Domain coeff_domain(Coeff coeff) { return coeff == Coeff::Mod2 ? Domain::Gf2 : Domain::Integers; }

AbelianGroup AbelianGroup::make(int rank, std::vector<Int> cyclic_orders) {
  AbelianGroup g;
  g.rank = rank;
  std::vector<Int> finite;
  for (Int d : cyclic_orders) {
    if (d == 0) {
      ++g.rank;
    } else if (d < 0) {
      finite.push_back(-d);
    } else {
      finite.push_back(d);
    }
  }
  const int n = static_cast<int>(finite.size());
  IntMatrix diag(n, n);
  for (int i = 0; i < n; ++i) diag(i, i) = finite[i];
  for (Int d : invariant_factors(diag)) {
    if (d != 1) g.torsion.push_back(d);
  }
  return g;
}

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& other) const {
  std::vector<Int> orders = torsion;
  orders.insert(orders.end(), other.torsion.begin(), other.torsion.end());
  return make(rank + other.rank, std::move(orders));
}

AbelianGroup AbelianGroup::power(int n) const {
  AbelianGroup out;
  for (int i = 0; i < n; ++i) out = out.direct_sum(*this);
  return out;
}

std::string AbelianGroup::to_string(Coeff coeff) const {
  std::vector<std::string> parts;
  const std::string ring = coeff == Coeff::Integers ? "Z" : coeff == Coeff::Mod2 ? "(Z/2)" : "Q";
  if (rank == 1) {
    parts.push_back(coeff == Coeff::Mod2 ? "Z/2" : ring);
  } else if (rank > 1) {
    parts.push_back(ring + "^" + std::to_string(rank));
  }
  for (Int d : torsion) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

AbelianGroup ring_module(int copies) { return AbelianGroup{copies, {}}; }

std::string HomologySummary::to_string() const {
  std::ostringstream os;
  for (int k = 0; k < 3; ++k) os << (k ? ", " : "") << "H" << k << " = " << degree[k].to_string(coeff);
  return os.str();
}

ChainComplex chain_complex(const SimplicialComplex2& complex) {
  ChainComplex cc{IntMatrix(complex.vertex_count(), complex.edge_count()),
                  IntMatrix(complex.edge_count(), complex.triangle_count())};
  for (int e = 0; e < complex.edge_count(); ++e) {
    cc.d1(complex.edges()[e][0], e) = -1;
    cc.d1(complex.edges()[e][1], e) = 1;
  }
  for (int t = 0; t < complex.triangle_count(); ++t) {
    const auto& [a, b, c] = complex.triangles()[t];
    cc.d2(*complex.edge_index(b, c), t) = 1;
    cc.d2(*complex.edge_index(a, c), t) = -1;
    cc.d2(*complex.edge_index(a, b), t) = 1;
  }
  return cc;
}

HomologySummary homology(const SimplicialComplex2& complex, Coeff coeff) {
  ChainComplex cc = chain_complex(complex);
  const Domain domain = coeff_domain(coeff);
  SmithOptions none{false, false, false, false};
  SmithForm s1 = smith_normal_form(cc.d1, domain, none);
  SmithForm s2 = smith_normal_form(cc.d2, domain, none);
  HomologySummary h;
  h.coeff = coeff;
  h.degree[0] = AbelianGroup{complex.vertex_count() - s1.rank, {}};
  h.degree[1] = AbelianGroup{complex.edge_count() - s1.rank - s2.rank, {}};
  h.degree[2] = AbelianGroup{complex.triangle_count() - s2.rank, {}};
  if (coeff == Coeff::Integers) {
    h.degree[0] = AbelianGroup::make(h.degree[0].rank, {}).direct_sum(AbelianGroup::make(0, s1.diagonal()));
    h.degree[1] = AbelianGroup::make(h.degree[1].rank, s2.diagonal());
  }
  return h;
}

HomologySummary cohomology(const SimplicialComplex2& complex, Coeff coeff) {
  HomologySummary h = homology(complex, coeff);
  if (coeff != Coeff::Integers) return h;
  HomologySummary c;
  c.coeff = coeff;
  c.degree[0] = AbelianGroup{h.degree[0].rank, {}};
  c.degree[1] = AbelianGroup{h.degree[1].rank, h.degree[0].torsion};
  c.degree[2] = AbelianGroup::make(h.degree[2].rank, h.degree[1].torsion);
  return c;
}

HomologyBasis::HomologyBasis(const IntMatrix& out, const IntMatrix& in, Coeff coeff)
    : coeff_(coeff), domain_(coeff_domain(coeff)), out_(out) {
  const int n = out.cols();
  if (in.rows() != n) throw std::invalid_argument("chain complex shapes disagree");
  SmithForm s = smith_normal_form(out, domain_, {false, false, true, true});
  const int r = s.rank;
  IntMatrix kernel = s.v.col_block(r, n);
  kernel_coords_ = s.v_inverse.row_block(r, n);
  IntMatrix image = kernel_coords_ * in;
  if (domain_ == Domain::Gf2) image = image.reduced_mod2();
  SmithForm q = smith_normal_form(image, domain_, {true, true, false, false});
  const int k = n - r;
  std::vector<int> kept;
  for (int i = 0; i < k; ++i) {
    Int order = i < q.rank ? q.d(i, i) : 0;
    if (order == 1) continue;
    if (coeff_ == Coeff::Rationals && order != 0) continue;
    kept.push_back(i);
    orders_.push_back(order);
  }
  class_map_ = IntMatrix(static_cast<int>(kept.size()), k);
  for (int row = 0; row < static_cast<int>(kept.size()); ++row) {
    for (int c = 0; c < k; ++c) class_map_(row, c) = q.u(kept[row], c);
    std::vector<Int> rep = kernel.apply(q.u_inverse.column(kept[row]));
    if (domain_ == Domain::Gf2) reduce_mod2(rep);
    reps_.push_back(std::move(rep));
  }
}

AbelianGroup HomologyBasis::group() const {
  if (coeff_ != Coeff::Integers) return AbelianGroup{size(), {}};
  return AbelianGroup::make(0, orders_);
}

bool HomologyBasis::is_cycle(std::span<const Int> chain) const {
  std::vector<Int> b = out_.apply(chain);
  if (domain_ == Domain::Gf2) reduce_mod2(b);
  return std::all_of(b.begin(), b.end(), [](Int x) { return x == 0; });
}

std::vector<Int> HomologyBasis::coordinates(std::span<const Int> cycle) const {
  if (!is_cycle(cycle)) throw std::invalid_argument("chain is not a cycle");
  std::vector<Int> coords = class_map_.apply(kernel_coords_.apply(cycle));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (domain_ == Domain::Gf2) {
      coords[i] = mod_positive(coords[i], 2);
    } else if (orders_[i] > 0) {
      coords[i] = mod_positive(coords[i], orders_[i]);
    }
  }
  return coords;
}

bool HomologyBasis::is_zero_class(std::span<const Int> cycle) const {
  auto c = coordinates(cycle);
  return std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; });
}

HomologyBasis h1_basis(const SimplicialComplex2& complex, Coeff coeff) {
  ChainComplex cc = chain_complex(complex);
  return HomologyBasis(cc.d1, cc.d2, coeff);
}

HomologyBasis h2_basis(const SimplicialComplex2& complex, Coeff coeff) {
  ChainComplex cc = chain_complex(complex);
  return HomologyBasis(cc.d2, IntMatrix(complex.triangle_count(), 0), coeff);
}

HomologyBasis cohomology_h1_basis(const SimplicialComplex2& complex, Coeff coeff) {
  ChainComplex cc = chain_complex(complex);
  return HomologyBasis(cc.d2.transpose(), cc.d1.transpose(), coeff);
}

HomologyBasis cohomology_h2_basis(const SimplicialComplex2& complex, Coeff coeff) {
  ChainComplex cc = chain_complex(complex);
  return HomologyBasis(IntMatrix(0, complex.triangle_count()), cc.d2.transpose(), coeff);
}

std::vector<Int> loop_chain(const SimplicialComplex2& complex, std::span<const Vertex> loop) {
  if (loop.size() >= 2 && loop.front() == loop.back()) loop = loop.first(loop.size() - 1);
  if (loop.size() < 3) throw Error(ErrorCode::NotACycle, "a closed loop needs at least three vertices");
  std::vector<Int> chain(complex.edge_count(), 0);
  for (std::size_t i = 0; i < loop.size(); ++i) {
    Vertex a = loop[i];
    Vertex b = loop[(i + 1) % loop.size()];
    if (a < 0 || b < 0 || a >= complex.vertex_count() || b >= complex.vertex_count()) {
      throw Error(ErrorCode::NotACycle, "loop vertex out of range");
    }
    auto e = complex.edge_index(a, b);
    if (!e) {
      throw Error(ErrorCode::NotACycle,
                  "no edge between " + std::to_string(a) + " and " + std::to_string(b));
    }
    chain[*e] += a < b ? 1 : -1;
  }
  return chain;
}

std::vector<Int> cycle_class(const SimplicialComplex2& complex, std::span<const Vertex> loop, Coeff coeff) {
  return h1_basis(complex, coeff).coordinates(loop_chain(complex, loop));
}

bool is_null_homologous(const SimplicialComplex2& complex, std::span<const Vertex> loop, Coeff coeff) {
  auto c = cycle_class(complex, loop, coeff);
  return std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; });
}

std::optional<BoundingChain> bounding_chain(const SimplicialComplex2& complex, std::span<const Int> z, Coeff coeff) {
  ChainComplex cc = chain_complex(complex);
  if (coeff != Coeff::Rationals) {
    bool ok = false;
    auto x = solve(cc.d2, z, coeff_domain(coeff), &ok);
    if (!ok) return std::nullopt;
    return BoundingChain{1, std::move(x)};
  }
  SmithForm s = smith_normal_form(cc.d2, Domain::Integers, {true, false, true, false});
  std::vector<Int> c = s.u.apply(z);
  for (int i = s.rank; i < static_cast<int>(c.size()); ++i) {
    if (c[i] != 0) return std::nullopt;
  }
  Int scale = 1;
  for (int i = 0; i < s.rank; ++i) {
    Int d = s.d(i, i);
    Int need = d / std::gcd(d, c[i] < 0 ? -c[i] : c[i]);
    scale = std::lcm(scale, need);
  }
  std::vector<Int> y(cc.d2.cols(), 0);
  for (int i = 0; i < s.rank; ++i) y[i] = c[i] * scale / s.d(i, i);
  return BoundingChain{scale, s.v.apply(y)};
}

std::vector<Int> cup_cochains(const SimplicialComplex2& complex, std::span<const Int> phi, std::span<const Int> psi,
                              Coeff coeff) {
  std::vector<Int> out(complex.triangle_count(), 0);
  for (int t = 0; t < complex.triangle_count(); ++t) {
    const auto& [a, b, c] = complex.triangles()[t];
    out[t] = phi[*complex.edge_index(a, b)] * psi[*complex.edge_index(b, c)];
    if (coeff == Coeff::Mod2) out[t] = mod_positive(out[t], 2);
  }
  return out;
}

Int pair(std::span<const Int> cochain, std::span<const Int> chain, Coeff coeff) {
  if (cochain.size() != chain.size()) throw std::invalid_argument("pairing length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) s += cochain[i] * chain[i];
  return coeff == Coeff::Mod2 ? mod_positive(s, 2) : s;
}

bool CupTable::all_zero() const {
  for (const auto& row : constants) {
    for (const auto& v : row) {
      if (std::any_of(v.begin(), v.end(), [](Int x) { return x != 0; })) return false;
    }
  }
  return true;
}

CupTable cup_product_h1(const SimplicialComplex2& complex, Coeff coeff) {
  if (coeff == Coeff::Rationals) {
    throw Error(ErrorCode::InvalidParameters, "cup products are computed over Z or Z/2 only");
  }
  HomologyBasis b1 = cohomology_h1_basis(complex, coeff);
  HomologyBasis b2 = cohomology_h2_basis(complex, coeff);
  CupTable table;
  table.coeff = coeff;
  table.h1_size = b1.size();
  table.h2_orders = b2.orders();
  table.constants.assign(b1.size(), std::vector<std::vector<Int>>(b1.size()));
  for (int i = 0; i < b1.size(); ++i) {
    for (int j = 0; j < b1.size(); ++j) {
      table.constants[i][j] = b2.coordinates(cup_cochains(complex, b1.representative(i), b1.representative(j), coeff));
    }
  }
  return table;
}

IntMatrix induced_map_h1(const SimplicialComplex2& sub, const SimplicialComplex2& target,
                         std::span<const Vertex> vertex_map, Coeff coeff) {
  if (static_cast<int>(vertex_map.size()) != sub.vertex_count()) {
    throw Error(ErrorCode::NotASubcomplex, "vertex map has the wrong length");
  }
  std::vector<Vertex> images(vertex_map.begin(), vertex_map.end());
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    throw Error(ErrorCode::NotASubcomplex, "vertex map is not injective");
  }
  for (Vertex v : vertex_map) {
    if (v < 0 || v >= target.vertex_count()) throw Error(ErrorCode::NotASubcomplex, "vertex image out of range");
  }
  for (const auto& t : sub.triangles()) {
    if (!target.triangle_index(vertex_map[t[0]], vertex_map[t[1]], vertex_map[t[2]])) {
      throw Error(ErrorCode::NotASubcomplex, "triangle has no image triangle");
    }
  }
  HomologyBasis src = h1_basis(sub, coeff);
  HomologyBasis dst = h1_basis(target, coeff);
  IntMatrix m(dst.size(), src.size());
  for (int j = 0; j < src.size(); ++j) {
    std::vector<Int> chain(target.edge_count(), 0);
    const auto& rep = src.representative(j);
    for (int e = 0; e < sub.edge_count(); ++e) {
      if (rep[e] == 0) continue;
      Vertex a = vertex_map[sub.edges()[e][0]];
      Vertex b = vertex_map[sub.edges()[e][1]];
      chain[*target.edge_index(a, b)] += a < b ? rep[e] : -rep[e];
    }
    auto coords = dst.coordinates(chain);
    for (int i = 0; i < dst.size(); ++i) m(i, j) = coords[i];
  }
  return m;
}

IntMatrix circle_map_h1(const SimplicialComplex2& target, std::span<const Vertex> loop, Coeff coeff) {
  auto coords = cycle_class(target, loop, coeff);
  IntMatrix m(static_cast<int>(coords.size()), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) m(static_cast<int>(i), 0) = coords[i];
  return m;
}

} // namespace bsurf
