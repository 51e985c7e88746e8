#include "bsurf/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bsurf {

namespace {

Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix arithmetic");
  return r;
}

Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in matrix arithmetic");
  return r;
}

BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }

Int magnitude(Int a) {
  if (a == INT64_MIN) throw std::overflow_error("integer overflow in matrix arithmetic");
  return a < 0 ? -a : a;
}

BigInt magnitude(const BigInt& a) { return abs(a); }

template <typename T>
T mod2(const T& x) {
  T r = x % 2;
  if (r < 0) r += 2;
  return r;
}

// s*a + t*b = g with g = gcd(a, b) > 0.
void extended_gcd(Int a, Int b, Int& g, Int& s, Int& t) {
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = add(r0, mul(-q, r1));
    Int s2 = add(s0, mul(-q, s1));
    Int t2 = add(t0, mul(-q, t1));
    r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
  }
  if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
  g = r0, s = s0, t = t0;
}

void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Runs the reduction while mirroring every elementary operation onto the
// requested transform matrices.
template <typename T>
class SmithReducer {
public:
  SmithReducer(const Matrix<T>& m, Domain domain, SmithOptions opt) : a_(m), domain_(domain), opt_(opt) {
    if (domain_ == Domain::Gf2) a_ = a_.reduced_mod2();
    if (opt_.want_u) u_ = Matrix<T>::identity(m.rows());
    if (opt_.want_u_inverse) ui_ = Matrix<T>::identity(m.rows());
    if (opt_.want_v) v_ = Matrix<T>::identity(m.cols());
    if (opt_.want_v_inverse) vi_ = Matrix<T>::identity(m.cols());
  }

  BasicSmithForm<T> run() {
    const int limit = std::min(a_.rows(), a_.cols());
    int t = 0;
    for (; t < limit; ++t) {
      int pr = -1;
      int pc = -1;
      T best = 0;
      for (int i = t; i < a_.rows(); ++i) {
        for (int j = t; j < a_.cols(); ++j) {
          if (a_(i, j) == 0) continue;
          T x = magnitude(a_(i, j));
          if (pr < 0 || x < best) {
            best = x;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      reduce_at(t);
      if (a_(t, t) < 0) negate_row(t);
    }
    BasicSmithForm<T> out;
    out.rank = t;
    out.d = std::move(a_);
    out.u = std::move(u_);
    out.u_inverse = std::move(ui_);
    out.v = std::move(v_);
    out.v_inverse = std::move(vi_);
    return out;
  }

private:
  T norm(const T& x) const { return domain_ == Domain::Gf2 ? mod2(x) : x; }

  static void row_axpy(Matrix<T>& m, int dst, int src, const T& q, Domain d) {
    for (int c = 0; c < m.cols(); ++c) {
      if (m(src, c) == 0) continue;
      T x = add(m(dst, c), mul(q, m(src, c)));
      m(dst, c) = d == Domain::Gf2 ? mod2(x) : x;
    }
  }
  static void col_axpy(Matrix<T>& m, int dst, int src, const T& q, Domain d) {
    for (int r = 0; r < m.rows(); ++r) {
      if (m(r, src) == 0) continue;
      T x = add(m(r, dst), mul(q, m(r, src)));
      m(r, dst) = d == Domain::Gf2 ? mod2(x) : x;
    }
  }

  // row_i += q * row_t
  void add_row(int i, int t, T q) {
    q = norm(q);
    if (q == 0) return;
    row_axpy(a_, i, t, q, domain_);
    if (opt_.want_u) row_axpy(u_, i, t, q, domain_);
    if (opt_.want_u_inverse) col_axpy(ui_, t, i, norm(-q), domain_);
  }

  // col_j += q * col_t
  void add_col(int j, int t, T q) {
    q = norm(q);
    if (q == 0) return;
    col_axpy(a_, j, t, q, domain_);
    if (opt_.want_v) col_axpy(v_, j, t, q, domain_);
    if (opt_.want_v_inverse) row_axpy(vi_, t, j, norm(-q), domain_);
  }

  static void swap_matrix_rows(Matrix<T>& m, int a, int b) {
    for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
  }
  static void swap_matrix_cols(Matrix<T>& m, int a, int b) {
    for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    swap_matrix_rows(a_, a, b);
    if (opt_.want_u) swap_matrix_rows(u_, a, b);
    if (opt_.want_u_inverse) swap_matrix_cols(ui_, a, b);
  }

  void swap_cols(int a, int b) {
    if (a == b) return;
    swap_matrix_cols(a_, a, b);
    if (opt_.want_v) swap_matrix_cols(v_, a, b);
    if (opt_.want_v_inverse) swap_matrix_rows(vi_, a, b);
  }

  void negate_row(int t) {
    for (int c = 0; c < a_.cols(); ++c) a_(t, c) = -a_(t, c);
    if (opt_.want_u) {
      for (int c = 0; c < u_.cols(); ++c) u_(t, c) = -u_(t, c);
    }
    if (opt_.want_u_inverse) {
      for (int r = 0; r < ui_.rows(); ++r) ui_(r, t) = -ui_(r, t);
    }
  }

  // Rows (t, i) <- [[s, x], [-b/g, a/g]] (rows t, i) where a = a_(t, c),
  // b = a_(i, c); afterwards a_(t, c) = g and a_(i, c) = 0.
  void mix_rows(int t, int i, int c) {
    const T a = a_(t, c);
    const T b = a_(i, c);
    T g, s, x;
    extended_gcd(a, b, g, s, x);
    const T p = b / g;
    const T q = a / g;
    auto mix = [&](Matrix<T>& m) {
      for (int k = 0; k < m.cols(); ++k) {
        T top = add(mul(s, m(t, k)), mul(x, m(i, k)));
        T bottom = add(mul(-p, m(t, k)), mul(q, m(i, k)));
        m(t, k) = norm(top);
        m(i, k) = norm(bottom);
      }
    };
    mix(a_);
    if (opt_.want_u) mix(u_);
    if (opt_.want_u_inverse) {
      for (int k = 0; k < ui_.rows(); ++k) {
        T left = add(mul(q, ui_(k, t)), mul(p, ui_(k, i)));
        T right = add(mul(-x, ui_(k, t)), mul(s, ui_(k, i)));
        ui_(k, t) = norm(left);
        ui_(k, i) = norm(right);
      }
    }
  }

  // Column analogue of mix_rows acting on columns (t, j) through row r.
  void mix_cols(int t, int j, int r) {
    const T a = a_(r, t);
    const T b = a_(r, j);
    T g, s, x;
    extended_gcd(a, b, g, s, x);
    const T p = b / g;
    const T q = a / g;
    auto mix = [&](Matrix<T>& m) {
      for (int k = 0; k < m.rows(); ++k) {
        T left = add(mul(s, m(k, t)), mul(x, m(k, j)));
        T right = add(mul(-p, m(k, t)), mul(q, m(k, j)));
        m(k, t) = norm(left);
        m(k, j) = norm(right);
      }
    };
    mix(a_);
    if (opt_.want_v) mix(v_);
    if (opt_.want_v_inverse) {
      for (int k = 0; k < vi_.cols(); ++k) {
        T top = add(mul(q, vi_(t, k)), mul(p, vi_(j, k)));
        T bottom = add(mul(-x, vi_(t, k)), mul(s, vi_(j, k)));
        vi_(t, k) = norm(top);
        vi_(j, k) = norm(bottom);
      }
    }
  }

  // Plain elimination when the pivot divides the entry, otherwise a gcd step.
  void clear_below(int t, int i) {
    if (domain_ == Domain::Gf2 || a_(i, t) % a_(t, t) == 0) {
      add_row(i, t, -(a_(i, t) / a_(t, t)));
    } else {
      mix_rows(t, i, t);
    }
  }

  void clear_right(int t, int j) {
    if (domain_ == Domain::Gf2 || a_(t, j) % a_(t, t) == 0) {
      add_col(j, t, -(a_(t, j) / a_(t, t)));
    } else {
      mix_cols(t, j, t);
    }
  }

  void reduce_at(int t) {
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < a_.rows(); ++i) {
        if (a_(i, t) != 0) clear_below(t, i);
      }
      for (int j = t + 1; j < a_.cols(); ++j) {
        if (a_(t, j) != 0) clear_right(t, j);
      }
      for (int i = t + 1; i < a_.rows() && !dirty; ++i) dirty = a_(i, t) != 0;
      if (dirty) continue;
      // Pivot must divide the rest of the matrix.
      int bad_row = -1;
      for (int i = t + 1; i < a_.rows() && bad_row < 0; ++i) {
        for (int j = t + 1; j < a_.cols(); ++j) {
          if (a_(i, j) % a_(t, t) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) return;
      add_row(t, bad_row, T(1));
    }
  }

  Matrix<T> a_;
  Domain domain_;
  SmithOptions opt_;
  Matrix<T> u_, ui_, v_, vi_;
};

Int narrow_value(const BigInt& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<Int>(x.get_si());
}

} // namespace

template <typename T>
Matrix<T> Matrix<T>::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, int cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::column(int c) const {
  std::vector<T> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

template <typename T>
Matrix<T> Matrix<T>::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const T& x = (*this)(r, k);
      if (x == 0) continue;
      for (int c = 0; c < other.cols_; ++c) {
        if (other(k, c) != 0) out(r, c) = add(out(r, c), mul(x, other(k, c)));
      }
    }
  }
  return out;
}

template <typename T>
std::vector<T> Matrix<T>::apply(std::span<const T> v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<T> out(rows_, T(0));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] = add(out[r], mul((*this)(r, c), v[c]));
    }
  }
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::row_block(int begin, int end) const {
  Matrix out(end - begin, cols_);
  for (int r = begin; r < end; ++r) {
    for (int c = 0; c < cols_; ++c) out(r - begin, c) = (*this)(r, c);
  }
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::col_block(int begin, int end) const {
  Matrix out(rows_, end - begin);
  for (int r = 0; r < rows_; ++r) {
    for (int c = begin; c < end; ++c) out(r, c - begin) = (*this)(r, c);
  }
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::hcat(const Matrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(rows_, cols_ + other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (int c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::reduced_mod2() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = mod2(x);
  return out;
}

template <typename T>
bool Matrix<T>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
}

template <typename T>
std::string Matrix<T>::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << '[';
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

template <typename T>
std::vector<T> BasicSmithForm<T>::diagonal() const {
  std::vector<T> out;
  for (int i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

template class Matrix<Int>;
template class Matrix<BigInt>;
template struct BasicSmithForm<Int>;
template struct BasicSmithForm<BigInt>;

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out(r, c) = static_cast<long>(m(r, c));
  }
  return out;
}

IntMatrix narrow(const BigMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out(r, c) = narrow_value(m(r, c));
  }
  return out;
}

BigSmithForm smith_normal_form(const BigMatrix& m, Domain domain, SmithOptions options) {
  return SmithReducer<BigInt>(m, domain, options).run();
}

SmithForm smith_normal_form(const IntMatrix& m, Domain domain, SmithOptions options) {
  try {
    return SmithReducer<Int>(m, domain, options).run();
  } catch (const std::overflow_error&) {
    BigSmithForm big = smith_normal_form(to_big(m), domain, options);
    SmithForm out;
    out.rank = big.rank;
    out.d = narrow(big.d);
    out.u = narrow(big.u);
    out.u_inverse = narrow(big.u_inverse);
    out.v = narrow(big.v);
    out.v_inverse = narrow(big.v_inverse);
    return out;
  }
}

int matrix_rank(const IntMatrix& m, Domain domain) {
  return smith_normal_form(m, domain, {false, false, false, false}).rank;
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
  return smith_normal_form(m, Domain::Integers, {false, false, false, false}).diagonal();
}

BigInt determinant(const BigMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  BigMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap_with = i;
          break;
        }
      }
      if (swap_with < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(swap_with, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return a(n - 1, n - 1) * sign;
}

Int determinant(const IntMatrix& m) { return narrow_value(determinant(to_big(m))); }

IntMatrix inverse(const IntMatrix& m, Domain domain) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
  SmithForm s = smith_normal_form(m, domain, {true, false, true, false});
  if (s.rank != m.rows()) throw std::domain_error("matrix is singular");
  for (Int d : s.diagonal()) {
    if (d != 1) throw std::domain_error("matrix is not invertible over the integers");
  }
  IntMatrix inv = s.v * s.u;
  return domain == Domain::Gf2 ? inv.reduced_mod2() : inv;
}

std::vector<Int> solve(const IntMatrix& m, std::span<const Int> b, Domain domain, bool* solvable) {
  SmithForm s = smith_normal_form(m, domain, {true, false, true, false});
  std::vector<Int> c = s.u.apply(b);
  if (domain == Domain::Gf2) {
    for (auto& x : c) x = mod2(x);
  }
  std::vector<Int> y(m.cols(), 0);
  bool ok = true;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (i < s.rank) {
      Int d = s.d(i, i);
      if (c[i] % d != 0) {
        ok = false;
        break;
      }
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      ok = false;
      break;
    }
  }
  if (solvable) *solvable = ok;
  if (!ok) return {};
  std::vector<Int> x = s.v.apply(y);
  if (domain == Domain::Gf2) {
    for (auto& v : x) v = mod2(v);
  }
  return x;
}

} // namespace bsurf
