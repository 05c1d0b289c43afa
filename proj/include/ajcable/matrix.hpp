#pragma once

// Dense matrices over an exact integral domain, with two independent
// determinant algorithms and a fraction-free solver.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ajcable/errors.hpp"
#include "ajcable/ring.hpp"

namespace ajcable {

/// What the matrix algorithms need from the entry ring.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Poly> {
  static Poly zero() { return {}; }
  static Poly one() { return Poly(1); }
  static bool is_zero(const Poly& x) { return x.is_zero(); }
  static Poly exact_div(const Poly& a, const Poly& b) { return ajcable::exact_div(a, b); }
};

template <>
struct RingTraits<mpz_class> {
  static mpz_class zero() { return 0; }
  static mpz_class one() { return 1; }
  static bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
  static mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw InexactDivision("integer division");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, RingTraits<T>::zero()) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<T>::one();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Submatrix on the given row and column index lists, in that order.
  DenseMatrix select(const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) const {
    DenseMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
    }
    return out;
  }

  /// Matrix with row r and column c deleted.
  DenseMatrix minor(std::size_t r, std::size_t c) const {
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i != r) rs.push_back(i);
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != c) cs.push_back(j);
    }
    return select(rs, cs);
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using PolyMatrix = DenseMatrix<Poly>;
using IntMatrix = DenseMatrix<mpz_class>;

namespace detail {

inline void require_square(std::size_t rows, std::size_t cols, const char* who) {
  if (rows != cols) {
    throw NotSquare(std::string(who) + ": " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

/// Bareiss elimination in place on the first `n` columns; returns false when
/// the leading n x n block is singular. `sign` tracks row swaps.
template <class T>
bool bareiss_eliminate(DenseMatrix<T>& a, std::size_t n, int& sign) {
  using R = RingTraits<T>;
  T prev = R::one();
  sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && R::is_zero(a(pivot, k))) ++pivot;
    if (pivot == n) return false;
    if (pivot != k) {
      a.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        T num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = R::exact_div(num, prev);
      }
      a(i, k) = R::zero();
    }
    prev = a(k, k);
  }
  return true;
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant with row pivoting on zero entries.
template <class T>
T det_bareiss(DenseMatrix<T> m) {
  detail::require_square(m.rows(), m.cols(), "det_bareiss");
  const std::size_t n = m.rows();
  if (n == 0) return RingTraits<T>::one();
  int sign = 1;
  if (!detail::bareiss_eliminate(m, n, sign)) return RingTraits<T>::zero();
  T det = m(n - 1, n - 1);
  return sign < 0 ? T(-det) : det;
}

inline constexpr std::size_t kCofactorLimit = 8;

/// Determinant by first-column Laplace expansion; limited to small sizes.
template <class T>
T det_cofactor(const DenseMatrix<T>& m) {
  detail::require_square(m.rows(), m.cols(), "det_cofactor");
  const std::size_t n = m.rows();
  if (n > kCofactorLimit) {
    throw TooLarge("det_cofactor: dimension " + std::to_string(n) + " exceeds " +
                   std::to_string(kCofactorLimit));
  }
  if (n == 0) return RingTraits<T>::one();
  if (n == 1) return m(0, 0);
  T acc = RingTraits<T>::zero();
  for (std::size_t r = 0; r < n; ++r) {
    if (RingTraits<T>::is_zero(m(r, 0))) continue;
    T term = m(r, 0) * det_cofactor(m.minor(r, 0));
    if (r % 2 == 0) {
      acc = acc + term;
    } else {
      acc = acc - term;
    }
  }
  return acc;
}

template <class T>
DenseMatrix<T> replace_column(const DenseMatrix<T>& m, std::size_t j, const std::vector<T>& col) {
  if (j >= m.cols() || col.size() != m.rows()) {
    throw DimensionMismatch("replace_column: column " + std::to_string(j) + " with " +
                            std::to_string(col.size()) + " entries into " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  DenseMatrix<T> out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) out(r, j) = col[r];
  return out;
}

template <class T>
std::vector<T> mat_vec(const DenseMatrix<T>& m, const std::vector<T>& x) {
  if (x.size() != m.cols()) throw DimensionMismatch("mat_vec");
  std::vector<T> out(m.rows(), RingTraits<T>::zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!RingTraits<T>::is_zero(m(r, c)) && !RingTraits<T>::is_zero(x[c])) {
        out[r] = out[r] + m(r, c) * x[c];
      }
    }
  }
  return out;
}

/// Solution of m * y = det(m) * b, which is adj(m) * b and so lies in the
/// entry ring. Returns {det, y}; y is empty when det = 0.
template <class T>
std::pair<T, std::vector<T>> solve_fraction_free(const DenseMatrix<T>& m, const std::vector<T>& b) {
  using R = RingTraits<T>;
  detail::require_square(m.rows(), m.cols(), "solve_fraction_free");
  const std::size_t n = m.rows();
  if (b.size() != n) throw DimensionMismatch("solve_fraction_free: right-hand side length");
  DenseMatrix<T> aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  int sign = 1;
  if (n == 0) return {R::one(), {}};
  if (!detail::bareiss_eliminate(aug, n, sign)) return {R::zero(), {}};
  // Row swaps do not change the solution; the eliminated last pivot is
  // sign * det, and row k of the triangular system is scaled consistently.
  T pivot_det = aug(n - 1, n - 1);
  T det = sign < 0 ? T(-pivot_det) : pivot_det;
  std::vector<T> y(n, R::zero());
  for (std::size_t ii = n; ii-- > 0;) {
    T acc = det * aug(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (!R::is_zero(aug(ii, j)) && !R::is_zero(y[j])) acc = acc - aug(ii, j) * y[j];
    }
    y[ii] = R::is_zero(acc) ? R::zero() : R::exact_div(acc, aug(ii, ii));
  }
  return {det, y};
}

}  // namespace ajcable
