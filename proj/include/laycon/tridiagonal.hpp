#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "laycon/errors.hpp"
#include "laycon/matrix.hpp"

namespace laycon {

// Symmetric tridiagonal matrix: diag has n entries, off n-1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }

  // Contiguous principal window [k, l] (0-based, inclusive).
  SymTridiagonal window(std::size_t k, std::size_t l) const {
    if (k > l || l >= size()) throw ValidationError("tridiagonal window out of range");
    SymTridiagonal w;
    w.diag.assign(diag.begin() + k, diag.begin() + l + 1);
    if (l > k) w.off.assign(off.begin() + k, off.begin() + l);
    return w;
  }

  Matrix dense() const {
    const std::size_t n = size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = diag[i];
      if (i + 1 < n) {
        m(i, i + 1) = off[i];
        m(i + 1, i) = off[i];
      }
    }
    return m;
  }
};

// The form used throughout layer analysis: all couplings equal to -1.
inline SymTridiagonal unit_coupling_tridiagonal(std::vector<double> diag) {
  SymTridiagonal t;
  const std::size_t n = diag.size();
  t.diag = std::move(diag);
  t.off.assign(n > 0 ? n - 1 : 0, -1.0);
  return t;
}

// Number of eigenvalues of T strictly below x, by the Sturm sign-count
// recurrence on the shifted LDL^T pivots. Zero pivots are displaced by a
// pivmin scaled to the off-diagonal magnitude.
inline int sturm_count_below(const SymTridiagonal& t, double x) {
  const std::size_t n = t.size();
  if (n == 0) return 0;
  double e2max = 1.0;
  for (double e : t.off) e2max = std::max(e2max, e * e);
  const double pivmin = 1e-290 * e2max;
  int count = 0;
  double q = t.diag[0] - x;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(q) < pivmin) q = q < 0 ? -pivmin : pivmin;
    q = (t.diag[i] - x) - (t.off[i - 1] * t.off[i - 1]) / q;
    if (q < 0) ++count;
  }
  return count;
}

// k-th smallest eigenvalue (k is 1-based) by bisection inside the
// Gershgorin interval. Absolute tolerance; deterministic.
inline double tridiagonal_kth_eig(const SymTridiagonal& t, int k, double tol = 1e-10) {
  const std::size_t n = t.size();
  if (tol <= 0) throw ValidationError("tridiagonal eigenvalue tolerance must be positive");
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw ValidationError("tridiagonal eigenvalue index out of range");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  if (k == 1) {
    // lambda_1 <= min_i a_ii (Rayleigh quotient of a basis vector)
    hi = std::min(hi, *std::min_element(t.diag.begin(), t.diag.end()));
  }
  const double pad = tol + 1e-12 * (1.0 + std::abs(lo) + std::abs(hi));
  lo -= pad;
  hi += pad;
  const int max_iter = 200;
  for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count_below(t, mid) >= k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

inline double tridiagonal_smallest_eig(const SymTridiagonal& t, double tol = 1e-10) {
  if (t.size() == 0) throw ValidationError("tridiagonal matrix is empty");
  return tridiagonal_kth_eig(t, 1, tol);
}

} // namespace laycon
