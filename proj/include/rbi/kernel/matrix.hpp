#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rbi/errors.hpp"
#include "rbi/kernel/ratfunc.hpp"
#include "rbi/kernel/scalar.hpp"

namespace rbi {

/// Dense rectangular matrix over an exact field (Scalar or RatFunc).
template <typename T>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, T zero = T())
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}
  static ExactMatrix from_rows(std::vector<std::vector<T>> rows, T zero = T()) {
    ExactMatrix m;
    m.zero_ = std::move(zero);
    m.rows_ = rows.size();
    m.cols_ = m.rows_ == 0 ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (auto& r : rows) {
      if (r.size() != m.cols_) throw Error("ragged matrix literal");
      for (auto& v : r) m.data_.push_back(std::move(v));
    }
    return m;
  }

  static ExactMatrix identity(std::size_t n, const T& one, T zero = T()) {
    ExactMatrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const T& zero() const noexcept { return zero_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
    ExactMatrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < std::min(i, cols_); ++j) {
        if (!(*this)(i, j).is_zero()) return false;
      }
    }
    return true;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !(*this)(i, j).is_zero()) return false;
      }
    }
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

using ScalarMatrix = ExactMatrix<Scalar>;

template <typename T>
struct TriangularEigen {
  std::vector<T> diag;
  ExactMatrix<T> P;  // unit upper triangular, columns are eigenvectors
};

/// Eigendecomposition of an upper-triangular matrix with pairwise distinct
/// diagonal entries by exact back-substitution: P^{-1} M P = diag(M).
/// Throws NotTriangular or DegenerateSpectrum.
template <typename T>
TriangularEigen<T> mat_eig_triangular(const ExactMatrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  if (m.cols() != n || !m.is_upper_triangular()) throw NotTriangular("matrix is not square upper-triangular");
  TriangularEigen<T> out;
  for (std::size_t i = 0; i < n; ++i) out.diag.push_back(m(i, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((out.diag[i] - out.diag[j]).is_zero()) {
        throw DegenerateSpectrum("repeated diagonal entry at positions " + std::to_string(i) + " and " +
                                 std::to_string(j));
      }
    }
  }
  out.P = ExactMatrix<T>::identity(n, one, m.zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      T acc = m.zero();
      for (std::size_t k = i + 1; k <= j; ++k) {
        if (!m(i, k).is_zero() && !out.P(k, j).is_zero()) acc += m(i, k) * out.P(k, j);
      }
      if (!acc.is_zero()) out.P(i, j) = -acc / (out.diag[i] - out.diag[j]);
    }
  }
  return out;
}

/// Inverse of a unit upper-triangular matrix.
template <typename T>
ExactMatrix<T> unit_upper_inverse(const ExactMatrix<T>& p, const T& one) {
  const std::size_t n = p.rows();
  ExactMatrix<T> inv = ExactMatrix<T>::identity(n, one, p.zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      T acc = p.zero();
      for (std::size_t k = i + 1; k <= j; ++k) {
        if (!p(i, k).is_zero() && !inv(k, j).is_zero()) acc += p(i, k) * inv(k, j);
      }
      inv(i, j) = -acc;
    }
  }
  return inv;
}

/// Solves A x = b exactly. Overdetermined systems must be consistent and have
/// a unique solution. Throws Singular or Inconsistent.
template <typename T>
std::vector<T> mat_solve_linear(ExactMatrix<T> a, std::vector<T> b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (b.size() != rows) throw Error("right-hand side length mismatch");
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(rank, k));
      std::swap(b[p], b[rank]);
    }
    const T inv = T(a(rank, c)).inverse();
    for (std::size_t k = c; k < cols; ++k) {
      if (!a(rank, k).is_zero()) a(rank, k) = a(rank, k) * inv;
    }
    b[rank] = b[rank] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a(r, c).is_zero()) continue;
      const T f = a(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!a(rank, k).is_zero()) a(r, k) -= f * a(rank, k);
      }
      if (!b[rank].is_zero()) b[r] -= f * b[rank];
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r) {
    if (!b[r].is_zero()) throw Inconsistent("linear system is inconsistent");
  }
  if (rank < cols) throw Singular("linear system is singular");
  std::vector<T> x(cols, a.zero());
  for (std::size_t r = 0; r < rank; ++r) x[pivot_cols[r]] = b[r];
  return x;
}

inline std::vector<Scalar> mat_solve_linear(const ScalarMatrix& a, const std::vector<Scalar>& b) {
  return mat_solve_linear<Scalar>(a, b);
}

inline TriangularEigen<Scalar> mat_eig_triangular(const ScalarMatrix& m) {
  return mat_eig_triangular<Scalar>(m, Scalar(1));
}

/// CSV dump: header "# rows=<r> cols=<c> basis=<name>", then one row per
/// line of comma-separated "p/q" rationals. Non-real entries are rejected.
std::string matrix_to_csv(const ScalarMatrix& m, const std::string& basis);
/// Inverse of matrix_to_csv; returns the matrix and the basis name.
std::pair<ScalarMatrix, std::string> matrix_from_csv(const std::string& text);

}  // namespace rbi
