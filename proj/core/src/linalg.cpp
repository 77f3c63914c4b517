#include "oligodyn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace oligodyn {

namespace {

void require_finite(const DenseMatrix& a) {
  for (double v : a.data()) {
    if (!std::isfinite(v)) throw std::invalid_argument("matrix entries must be finite");
  }
}

double off_diagonal_norm(const DenseMatrix& a) {
  const std::size_t n = a.size();
  double s = 0.0;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) s += a(r, c) * a(r, c);
  }
  return std::sqrt(2.0 * s);
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.data()) s += v * v;
  return std::sqrt(s);
}

// One cyclic sweep over all upper-triangle pairs.
void jacobi_sweep(DenseMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const double apq = a(p, q);
      if (apq == 0.0) continue;
      const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
      double t;
      if (std::abs(theta) > 1e150) {
        t = 1.0 / (2.0 * theta);
      } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
      }
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      const double tau = s / (1.0 + c);

      a(p, p) -= t * apq;
      a(q, q) += t * apq;
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const double arp = a(r, p);
        const double arq = a(r, q);
        const double np = arp - s * (arq + tau * arp);
        const double nq = arq + s * (arp - tau * arq);
        a(r, p) = np;
        a(p, r) = np;
        a(r, q) = nq;
        a(q, r) = nq;
      }
    }
  }
}

}  // namespace

std::vector<double> solve_linear(const DenseMatrix& a, std::vector<double> b) {
  const std::size_t n = a.size();
  if (b.size() != n) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "right-hand side has length %zu, expected %zu",
                  b.size(), n);
    throw ShapeError(msg);
  }
  if (n == 0) return {};
  require_finite(a);
  for (double v : b) {
    if (!std::isfinite(v)) throw std::invalid_argument("right-hand side must be finite");
  }

  DenseMatrix lu = a;
  std::vector<double> scale(n);
  for (std::size_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < n; ++c) s = std::max(s, std::abs(lu(r, c)));
    if (s == 0.0) {
      char msg[64];
      std::snprintf(msg, sizeof msg, "singular matrix: row %zu is zero", r);
      throw SingularMatrixError(msg);
    }
    scale[r] = s;
  }

  for (std::size_t k = 0; k < n; ++k) {
    // scaled partial pivoting; strict > keeps the smallest row on ties
    std::size_t best = k;
    double best_ratio = std::abs(lu(k, k)) / scale[k];
    for (std::size_t r = k + 1; r < n; ++r) {
      const double ratio = std::abs(lu(r, k)) / scale[r];
      if (ratio > best_ratio) {
        best = r;
        best_ratio = ratio;
      }
    }
    if (std::abs(lu(best, k)) < kPivotTol * scale[best]) {
      char msg[96];
      std::snprintf(msg, sizeof msg,
                    "singular matrix: no acceptable pivot in column %zu", k);
      throw SingularMatrixError(msg);
    }
    if (best != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(best, c));
      std::swap(b[k], b[best]);
      std::swap(scale[k], scale[best]);
    }
    const double pivot = lu(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = lu(r, k) / pivot;
      if (f == 0.0) continue;
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= f * lu(k, c);
      b[r] -= f * b[k];
    }
  }

  for (std::size_t i = n; i-- > 0;) {
    double sum = b[i];
    for (std::size_t c = i + 1; c < n; ++c) sum -= lu(i, c) * b[c];
    b[i] = sum / lu(i, i);
  }
  return b;
}

EigenResult symmetric_eigenvalues(DenseMatrix a, double tol) {
  const std::size_t n = a.size();
  require_finite(a);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      const double delta = std::abs(a(r, c) - a(c, r));
      if (delta > kSymmetryTol) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "matrix is not symmetric: |a(%zu,%zu) - a(%zu,%zu)| = %.3g",
                      r, c, c, r, delta);
        throw NotSymmetricError(msg);
      }
    }
  }

  EigenResult out;
  if (n == 0) return out;

  const double threshold = tol * std::max(1.0, frobenius_norm(a));
  double off = off_diagonal_norm(a);
  while (off > threshold) {
    if (out.sweeps == kJacobiMaxSweeps) {
      char msg[128];
      std::snprintf(msg, sizeof msg,
                    "jacobi eigensolver: %d sweeps exhausted, off-norm %.3g above %.3g",
                    kJacobiMaxSweeps, off, threshold);
      throw NoConvergenceError(msg);
    }
    jacobi_sweep(a);
    ++out.sweeps;
    off = off_diagonal_norm(a);
  }
  out.off_norm = off;

  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a(i, i);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

}  // namespace oligodyn
