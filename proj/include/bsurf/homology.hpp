#pragma once

#include "bsurf/complex.hpp"
#include "bsurf/matrix.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsurf {

enum class Coeff { Integers, Mod2, Rationals };

const char* coeff_name(Coeff coeff);     // "Z", "Z/2", "Q"
std::optional<Coeff> parse_coeff(std::string_view text); // "z", "z2", "q"
Domain coeff_domain(Coeff coeff);

/// Finitely generated module over the coefficient ring: rank free summands
/// plus cyclic torsion summands. Torsion is kept as invariant factors (each
/// dividing the next, all > 1), so equality is isomorphism.
struct AbelianGroup {
  int rank = 0;
  std::vector<Int> torsion;

  static AbelianGroup make(int rank, std::vector<Int> cyclic_orders);
  AbelianGroup direct_sum(const AbelianGroup& other) const;
  AbelianGroup power(int n) const;
  bool is_free() const { return torsion.empty(); }
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string(Coeff coeff) const;

  bool operator==(const AbelianGroup& other) const = default;
};

/// The coefficient ring itself as a module.
AbelianGroup ring_module(int copies = 1);

struct HomologySummary {
  Coeff coeff = Coeff::Integers;
  std::array<AbelianGroup, 3> degree;

  std::string to_string() const;
  bool operator==(const HomologySummary& other) const = default;
};

/// Boundary matrices in the canonical simplex order. Edges are oriented from
/// the smaller to the larger vertex, triangles [a<b<c] have boundary
/// [b,c] - [a,c] + [a,b].
struct ChainComplex {
  IntMatrix d1; // V x E
  IntMatrix d2; // E x F
};

ChainComplex chain_complex(const SimplicialComplex2& complex);

HomologySummary homology(const SimplicialComplex2& complex, Coeff coeff);

/// Cohomology through universal coefficients from the homology data.
HomologySummary cohomology(const SimplicialComplex2& complex, Coeff coeff);

/// Explicit basis for ker(out) / im(in) where out: C -> C' and in: C'' -> C.
/// Over Q only free generators are kept; over Z/2 every generator has order 2
/// and is recorded with order 0 like a free one.
class HomologyBasis {
public:
  HomologyBasis(const IntMatrix& out, const IntMatrix& in, Coeff coeff);

  Coeff coeff() const { return coeff_; }
  int size() const { return static_cast<int>(orders_.size()); }
  /// 0 for an infinite-order (free) generator, otherwise its finite order.
  const std::vector<Int>& orders() const { return orders_; }
  /// Cycle representing generator i.
  const std::vector<Int>& representative(int i) const { return reps_[i]; }
  AbelianGroup group() const;

  bool is_cycle(std::span<const Int> chain) const;
  /// Coordinates of a cycle's class, reduced modulo the generator orders
  /// (mod 2 over Z/2). Throws std::invalid_argument for non-cycles.
  std::vector<Int> coordinates(std::span<const Int> cycle) const;
  bool is_zero_class(std::span<const Int> cycle) const;

private:
  Coeff coeff_;
  Domain domain_;
  IntMatrix out_;
  IntMatrix kernel_coords_; // kernel coordinates of a cycle
  IntMatrix class_map_;     // kernel coordinates -> generator coordinates (kept rows only)
  std::vector<Int> orders_;
  std::vector<std::vector<Int>> reps_;
};

HomologyBasis h1_basis(const SimplicialComplex2& complex, Coeff coeff);
HomologyBasis h2_basis(const SimplicialComplex2& complex, Coeff coeff);
/// Cocycle bases; cochains are indexed like the simplices.
HomologyBasis cohomology_h1_basis(const SimplicialComplex2& complex, Coeff coeff);
HomologyBasis cohomology_h2_basis(const SimplicialComplex2& complex, Coeff coeff);

/// Signed edge chain of a closed vertex loop. A repeated first vertex at the
/// end is accepted. Throws NotACycle when consecutive vertices span no edge.
std::vector<Int> loop_chain(const SimplicialComplex2& complex, std::span<const Vertex> loop);

/// Class of a closed vertex loop in the computed H1 basis.
std::vector<Int> cycle_class(const SimplicialComplex2& complex, std::span<const Vertex> loop, Coeff coeff);
bool is_null_homologous(const SimplicialComplex2& complex, std::span<const Vertex> loop, Coeff coeff);

/// Triangle chain c with boundary equal to scale * z, for the smallest
/// positive scale the ring needs (always 1 over Z and Z/2). Empty optional when
/// z is not a boundary.
struct BoundingChain {
  Int scale = 1;
  std::vector<Int> chain;
};
std::optional<BoundingChain> bounding_chain(const SimplicialComplex2& complex, std::span<const Int> z, Coeff coeff);

/// Alexander-Whitney product of two 1-cochains: value on [a<b<c] is
/// phi[a,b] * psi[b,c]. Reduced mod 2 over Z/2.
std::vector<Int> cup_cochains(const SimplicialComplex2& complex, std::span<const Int> phi, std::span<const Int> psi,
                              Coeff coeff);

Int pair(std::span<const Int> cochain, std::span<const Int> chain, Coeff coeff);

/// Structure constants of H^1 x H^1 -> H^2 on the computed cocycle bases:
/// constants[i][j] are the H^2 coordinates of basis_i cup basis_j.
struct CupTable {
  Coeff coeff = Coeff::Mod2;
  int h1_size = 0;
  std::vector<Int> h2_orders;
  std::vector<std::vector<std::vector<Int>>> constants;

  bool all_zero() const;
};

/// Integers or Mod2 only; throws InvalidParameters otherwise.
CupTable cup_product_h1(const SimplicialComplex2& complex, Coeff coeff);

/// Matrix of H1(sub) -> H1(target) in the computed bases, for the simplicial
/// embedding sending sub vertex i to vertex_map[i]. Throws NotASubcomplex when
/// some triangle of `sub` has no image triangle.
IntMatrix induced_map_h1(const SimplicialComplex2& sub, const SimplicialComplex2& target,
                         std::span<const Vertex> vertex_map, Coeff coeff);

/// One-column matrix: image of the fundamental class of a circle embedded as
/// the given loop.
IntMatrix circle_map_h1(const SimplicialComplex2& target, std::span<const Vertex> loop, Coeff coeff);

} // namespace bsurf
