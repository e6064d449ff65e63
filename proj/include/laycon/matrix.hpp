#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "laycon/errors.hpp"

namespace laycon {

// Dense row-major matrix of doubles. Small sizes only (graphs at desk scale),
// so no blocking or expression machinery.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw ValidationError("matrix initializer rows have unequal lengths");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Principal submatrix: remove row i and column i (0-based).
inline Matrix grounded(const Matrix& m, std::size_t i) {
  if (!m.square()) throw ValidationError("grounded: matrix must be square");
  const std::size_t n = m.rows();
  if (n < 2) throw ValidationError("grounded: matrix must be at least 2x2");
  if (i >= n) throw ValidationError("grounded: index out of range");
  Matrix out(n - 1, n - 1);
  for (std::size_t r = 0, ro = 0; r < n; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, co = 0; c < n; ++c) {
      if (c == i) continue;
      out(ro, co) = m(r, c);
      ++co;
    }
    ++ro;
  }
  return out;
}

// Determinant by LU with partial pivoting; takes a copy and factors in place.
inline double lu_determinant(Matrix m) {
  if (!m.square()) throw ValidationError("lu_determinant: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(m(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(m(r, k)) > best) {
        best = std::abs(m(r, k));
        piv = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = m(r, k) / m(k, k);
      for (std::size_t c = k + 1; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return det;
}

} // namespace laycon
