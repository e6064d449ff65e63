#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "laycon/errors.hpp"
#include "laycon/matrix.hpp"
#include "laycon/tridiagonal.hpp"

namespace laycon {

namespace detail {

inline double sign_of(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

struct BalancedMatrix {
  Matrix a;
  int lo = 0; // eigenvalues outside [lo, hi] sit isolated on the diagonal
  int hi = 0;
};

// EISPACK balanc: permute to isolate eigenvalues reachable by row/column
// triangularization, then scale the active window by radix powers. Both are
// exact similarities, so eigenvalues are unchanged. The permutation phase is
// what lets reducible matrices (graph Laplacians with a zero leader row)
// deflate without roundoff.
inline BalancedMatrix balance(Matrix a) {
  const int n = static_cast<int>(a.rows());
  int lo = 0, hi = n - 1;

  auto exchange = [&](int j, int m) {
    if (j == m) return;
    for (int i = 0; i <= hi; ++i) std::swap(a(i, j), a(i, m));
    for (int i = lo; i < n; ++i) std::swap(a(j, i), a(m, i));
  };

  bool moved = true;
  while (moved && hi >= lo) { // rows whose active off-diagonal is zero -> bottom
    moved = false;
    for (int j = hi; j >= lo; --j) {
      bool zero = true;
      for (int i = lo; i <= hi && zero; ++i)
        if (i != j && a(j, i) != 0.0) zero = false;
      if (zero) {
        exchange(j, hi);
        --hi;
        moved = true;
        break;
      }
    }
  }
  moved = true;
  while (moved && lo <= hi) { // columns likewise -> left
    moved = false;
    for (int j = lo; j <= hi; ++j) {
      bool zero = true;
      for (int i = lo; i <= hi && zero; ++i)
        if (i != j && a(i, j) != 0.0) zero = false;
      if (zero) {
        exchange(j, lo);
        ++lo;
        moved = true;
        break;
      }
    }
  }

  const double radix = 2.0, sq = radix * radix;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = lo; i <= hi; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = lo; j <= hi; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double s = c + r;
      double g = r / radix;
      while (c < g) {
        f *= radix;
        c *= sq;
      }
      g = r * radix;
      while (c >= g) {
        f /= radix;
        c /= sq;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (int j = lo; j < n; ++j) a(i, j) *= g;
        for (int j = 0; j <= hi; ++j) a(j, i) *= f;
      }
    }
  }
  return {std::move(a), lo, hi};
}

// Householder similarity reduction of the window [lo, hi] to upper Hessenberg.
inline void hessenberg_window(Matrix& a, int lo, int hi) {
  const int n = static_cast<int>(a.rows());
  std::vector<double> ort(n, 0.0);
  for (int m = lo + 1; m <= hi - 1; ++m) {
    double scale = 0.0;
    for (int i = m; i <= hi; ++i) scale += std::abs(a(i, m - 1));
    if (scale == 0.0) continue;

    double h = 0.0;
    for (int i = hi; i >= m; --i) {
      ort[i] = a(i, m - 1) / scale;
      h += ort[i] * ort[i];
    }
    double g = std::sqrt(h);
    if (ort[m] > 0) g = -g;
    h -= ort[m] * g;
    ort[m] -= g;

    // A <- P A P with P = I - u u^T / h
    for (int j = m; j < n; ++j) {
      double f = 0.0;
      for (int i = hi; i >= m; --i) f += ort[i] * a(i, j);
      f /= h;
      for (int i = m; i <= hi; ++i) a(i, j) -= f * ort[i];
    }
    for (int i = 0; i <= hi; ++i) {
      double f = 0.0;
      for (int j = hi; j >= m; --j) f += ort[j] * a(i, j);
      f /= h;
      for (int j = m; j <= hi; ++j) a(i, j) -= f * ort[j];
    }
    a(m, m - 1) = scale * g;
    for (int i = m + 1; i <= hi; ++i) a(i, m - 1) = 0.0;
  }
}

// Francis double-shift QR on an upper Hessenberg window (classic EISPACK
// hqr, eigenvalues only). Exceptional shifts at iterations 10 and 20 of a
// block; throws NumericalError past the per-block or total budget.
inline void hqr_window(Matrix& a, int lo, int hi, std::vector<double>& wr,
                       std::vector<double>& wi, int total_budget) {
  const int n = static_cast<int>(a.rows());
  const double eps = std::numeric_limits<double>::epsilon();

  double anorm = 0.0;
  for (int i = lo; i <= hi; ++i)
    for (int j = std::max(i - 1, lo); j <= hi; ++j) anorm += std::abs(a(i, j));

  for (int i = 0; i < n; ++i) {
    if (i < lo || i > hi) {
      wr[i] = a(i, i);
      wi[i] = 0.0;
    }
  }

  int nn = hi;
  int total_its = 0;
  double t = 0.0;
  while (nn >= lo) {
    int its = 0;
    int l = lo;
    do {
      for (l = nn; l > lo; --l) {
        double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) <= eps * s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      double x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = 0.0;
        --nn;
      } else {
        double y = a(nn - 1, nn - 1);
        double w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          double p = 0.5 * (y - x);
          double q = p * p + w;
          double z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + sign_of(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn - 1] = -(wi[nn] = z);
          }
          nn -= 2;
        } else {
          if (its == 30 || ++total_its > total_budget)
            throw NumericalError("eigenvalue QR iteration did not converge within budget");
          if (its == 10 || its == 20) {
            t += x;
            for (int i = lo; i <= nn; ++i) a(i, i) -= x;
            double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = 0;
          double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
          for (m = nn - 2; m >= l; --m) {
            z = a(m, m);
            const double rr = x - z;
            const double ss = y - z;
            p = (rr * ss - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - rr - ss;
            r = a(m + 2, m + 1);
            double s = std::abs(p) + std::abs(q) + std::abs(r);
            if (s == 0.0) {
              p = 1.0;
              q = r = 0.0;
              s = 1.0;
            }
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u <= eps * v) break;
          }
          for (int i = m; i < nn - 1; ++i) {
            a(i + 2, i) = 0.0;
            if (i != m) a(i + 2, i - 1) = 0.0;
          }
          for (int k = m; k < nn; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k + 1 != nn) r = a(k + 2, k - 1);
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
            if (s != 0.0) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                double pp = a(k, j) + q * a(k + 1, j);
                if (k + 1 != nn) {
                  pp += r * a(k + 2, j);
                  a(k + 2, j) -= pp * z;
                }
                a(k + 1, j) -= pp * y;
                a(k, j) -= pp * x;
              }
              const int mmin = nn < k + 3 ? nn : k + 3;
              for (int i = l; i <= mmin; ++i) {
                double pp = x * a(i, k) + y * a(i, k + 1);
                if (k + 1 != nn) {
                  pp += z * a(i, k + 2);
                  a(i, k + 2) -= pp * r;
                }
                a(i, k + 1) -= pp * q;
                a(i, k) -= pp;
              }
            }
          }
        }
      }
    } while (l + 1 < nn);
  }
}

// Strongly connected components of the off-diagonal sparsity pattern
// (iterative Tarjan). A permutation grouping each component is an exact
// similarity to block triangular form, so the spectrum of the matrix is the
// union of the spectra of the component principal submatrices. Splitting
// first keeps repeated eigenvalues shared across components from smearing
// by the usual eps^(1/k) Jordan-coupling amount inside the QR iteration;
// plain balancing only isolates single rows or columns.
inline std::vector<std::vector<int>> sparsity_components(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && m(i, j) != 0.0) adj[i].push_back(j);

  std::vector<int> index(n, -1), lowlink(n, 0), comp_of(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < adj[f.v].size()) {
        const int w = adj[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        if (lowlink[f.v] == index[f.v]) {
          std::vector<int> comp;
          while (true) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
            if (w == f.v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        const int v = f.v;
        call.pop_back();
        if (!call.empty())
          lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

// Eigenvalues of one irreducible block: balance (scaling phase), Hessenberg
// reduction, Francis double-shift QR.
inline std::vector<std::complex<double>> block_eigenvalues(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::complex<double>> out;
  if (n == 0) return out;
  BalancedMatrix b = balance(m);
  if (b.hi - b.lo >= 2) hessenberg_window(b.a, b.lo, b.hi);
  std::vector<double> wr(n, 0.0), wi(n, 0.0);
  hqr_window(b.a, b.lo, b.hi, wr, wi, 100 * n);
  out.resize(n);
  for (int i = 0; i < n; ++i) out[i] = {wr[i], wi[i]};
  return out;
}

} // namespace detail

// Householder similarity reduction to upper Hessenberg form (whole matrix).
inline Matrix hessenberg(Matrix a) {
  if (!a.square()) throw ValidationError("hessenberg: matrix must be square");
  const int n = static_cast<int>(a.rows());
  if (n >= 3) detail::hessenberg_window(a, 0, n - 1);
  return a;
}

struct Spectrum {
  std::vector<std::complex<double>> values; // sorted by (re, im)
  double max_abs_imag = 0.0;
};

// All eigenvalues of a general real square matrix: permute to block
// triangular form (strongly connected components of the sparsity pattern),
// then balance, Hessenberg-reduce and QR-iterate each irreducible block.
// Every step is generic dense linear algebra, fully independent of the
// layer decomposition, so this can arbitrate it.
inline Spectrum dense_eigenvalues(const Matrix& m) {
  if (!m.square()) throw ValidationError("dense_eigenvalues: matrix must be square");
  const int n = static_cast<int>(m.rows());
  Spectrum s;
  if (n == 0) return s;

  for (const auto& comp : detail::sparsity_components(m)) {
    Matrix block(comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) block(i, j) = m(comp[i], comp[j]);
    const auto vals = detail::block_eigenvalues(block);
    s.values.insert(s.values.end(), vals.begin(), vals.end());
  }
  std::sort(s.values.begin(), s.values.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  for (const auto& z : s.values) s.max_abs_imag = std::max(s.max_abs_imag, std::abs(z.imag()));
  return s;
}

// Real parts, ascending. Throws if any eigenvalue carries more imaginary
// mass than imag_tol: callers here always hand in matrices with real spectra.
inline std::vector<double> dense_real_eigenvalues(const Matrix& m, double imag_tol = 1e-9) {
  const Spectrum s = dense_eigenvalues(m);
  if (s.max_abs_imag > imag_tol) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", s.max_abs_imag);
    throw NumericalError(std::string("dense_real_eigenvalues: spectrum has imaginary part ") + buf);
  }
  std::vector<double> out;
  out.reserve(s.values.size());
  for (const auto& z : s.values) out.push_back(z.real());
  return out;
}

// Symmetric matrix -> tridiagonal via the Hessenberg reduction (which
// preserves symmetry up to roundoff), symmetrizing the couplings.
inline SymTridiagonal sym_tridiagonalize(const Matrix& a) {
  if (!a.square()) throw ValidationError("sym_tridiagonalize: matrix must be square");
  const std::size_t n = a.rows();
  double scale = 0.0, asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      scale = std::max(scale, std::abs(a(i, j)));
      asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
    }
  if (asym > 1e-9 * (1.0 + scale))
    throw ValidationError("sym_tridiagonalize: matrix is not symmetric");
  const Matrix h = hessenberg(a);
  SymTridiagonal t;
  t.diag.resize(n);
  t.off.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    t.diag[i] = h(i, i);
    if (i + 1 < n) t.off[i] = 0.5 * (h(i + 1, i) + h(i, i + 1));
  }
  return t;
}

// k-th smallest eigenvalue of a symmetric matrix (k is 1-based).
inline double symmetric_kth_eig(const Matrix& a, int k, double tol = 1e-10) {
  return tridiagonal_kth_eig(sym_tridiagonalize(a), k, tol);
}

} // namespace laycon
