#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "distrig/errors.hpp"
#include "distrig/rational.hpp"

namespace distrig {

// Dense row-major matrix. Small and exact-friendly; no expression templates.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw PreconditionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  // Rows listed in `which`, in that order.
  Matrix select_rows(const std::vector<std::size_t>& which) const {
    Matrix out(which.size(), cols_);
    for (std::size_t i = 0; i < which.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(which[i], c);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

// Rank of an integer matrix by fraction-free (Bareiss) elimination with full
// pivoting. Every division is exact; the pivot of least bit size is chosen to
// slow coefficient growth.
inline std::size_t exact_rank(IntegerMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  std::size_t rank = 0;
  while (rank < rows && rank < cols) {
    std::size_t best_r = rows, best_c = cols, best_size = 0;
    for (std::size_t r = rank; r < rows; ++r) {
      for (std::size_t c = rank; c < cols; ++c) {
        const Integer& v = m(r, c);
        if (sgn(v) == 0) continue;
        const std::size_t size = mpz_sizeinbase(v.get_mpz_t(), 2);
        if (best_r == rows || size < best_size) {
          best_r = r;
          best_c = c;
          best_size = size;
        }
      }
    }
    if (best_r == rows) break;
    m.swap_rows(rank, best_r);
    m.swap_cols(rank, best_c);
    const Integer pivot = m(rank, rank);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Integer lead = m(r, rank);
      for (std::size_t c = rank + 1; c < cols; ++c) {
        Integer& v = m(r, c);
        v *= pivot;
        v -= lead * m(rank, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(r, rank) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

// Scales every row by the lcm of its denominators; row scaling preserves rank
// and the sign pattern of each row.
inline IntegerMatrix clear_denominators(const RationalMatrix& a) {
  IntegerMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Integer v = a(r, c).get_num() * l;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), a(r, c).get_den_mpz_t());
      out(r, c) = std::move(v);
    }
  }
  return out;
}

inline std::size_t exact_rank(const RationalMatrix& a) { return exact_rank(clear_denominators(a)); }

// Determinant of a square rational matrix (Gaussian elimination over Q).
inline Rational determinant(RationalMatrix a) {
  if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a(piv, k)) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      a.swap_rows(piv, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Rational f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return det;
}

// Solves a x = b exactly for square non-singular a.
inline std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw PreconditionError("solve: shape mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a(piv, k)) == 0) ++piv;
    if (piv == n) throw PreconditionError("solve: singular matrix");
    a.swap_rows(piv, k);
    std::swap(b[piv], b[k]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || sgn(a(r, k)) == 0) continue;
      const Rational f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      b[r] -= f * b[k];
    }
  }
  for (std::size_t k = 0; k < n; ++k) b[k] /= a(k, k);
  return b;
}

}  // namespace distrig
