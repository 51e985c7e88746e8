#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bsurf {

using Int = std::int64_t;
using BigInt = mpz_class;

/// Dense row-major matrix over Int or BigInt. Int arithmetic is overflow
/// checked and throws std::overflow_error.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<T> column(int c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  std::vector<T> apply(std::span<const T> v) const;
  /// Rows [begin, end) as a new matrix.
  Matrix row_block(int begin, int end) const;
  /// Columns [begin, end) as a new matrix.
  Matrix col_block(int begin, int end) const;
  /// Horizontal concatenation.
  Matrix hcat(const Matrix& other) const;
  Matrix reduced_mod2() const;

  bool is_zero() const;
  bool operator==(const Matrix& other) const = default;
  std::string to_string() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using BigMatrix = Matrix<BigInt>;

BigMatrix to_big(const IntMatrix& m);
/// Throws std::overflow_error when some entry does not fit.
IntMatrix narrow(const BigMatrix& m);

/// Integers (Euclidean domain) or the field with two elements.
enum class Domain { Integers, Gf2 };

struct SmithOptions {
  bool want_u = true;
  bool want_u_inverse = false;
  bool want_v = true;
  bool want_v_inverse = false;
};

/// U * M * V = D with D diagonal, d_i | d_{i+1}, nonzero entries positive, and
/// U, V invertible over the domain. Inverses are filled when requested.
template <typename T>
struct BasicSmithForm {
  Matrix<T> u;
  Matrix<T> u_inverse;
  Matrix<T> d;
  Matrix<T> v;
  Matrix<T> v_inverse;
  int rank = 0;

  std::vector<T> diagonal() const;
};

using SmithForm = BasicSmithForm<Int>;
using BigSmithForm = BasicSmithForm<BigInt>;

/// Pivots on the entry of smallest absolute value, ties broken by (row, col).
/// Entries divisible by the pivot are eliminated directly, others through a
/// 2x2 unimodular extended-gcd step. The Int version reruns in arbitrary
/// precision when an intermediate overflows and throws std::overflow_error
/// only if the final result does not fit.
SmithForm smith_normal_form(const IntMatrix& m, Domain domain = Domain::Integers, SmithOptions options = {});
BigSmithForm smith_normal_form(const BigMatrix& m, Domain domain = Domain::Integers, SmithOptions options = {});

/// Rank over the domain without computing transforms.
int matrix_rank(const IntMatrix& m, Domain domain = Domain::Integers);

/// Invariant factors (nonzero diagonal of the Smith form) without transforms.
std::vector<Int> invariant_factors(const IntMatrix& m);

/// Determinant via fraction-free elimination (Bareiss). Square matrices only.
BigInt determinant(const BigMatrix& m);
Int determinant(const IntMatrix& m);

/// Inverse of a matrix invertible over the domain (unimodular over Integers).
/// Throws std::domain_error otherwise.
IntMatrix inverse(const IntMatrix& m, Domain domain = Domain::Integers);

/// Some x with m * x = b over the domain; `solvable` reports whether one exists
/// (the result is empty otherwise).
std::vector<Int> solve(const IntMatrix& m, std::span<const Int> b, Domain domain, bool* solvable);

} // namespace bsurf
