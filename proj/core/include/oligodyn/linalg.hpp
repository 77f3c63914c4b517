#pragma once

#include <cstddef>
#include <vector>

#include "oligodyn/errors.hpp"

namespace oligodyn {

/// Row-major square matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), a_(n * n, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t size() const { return n_; }

  double& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  const std::vector<double>& data() const { return a_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Relative pivot threshold below which LU elimination reports the matrix
/// as singular.
inline constexpr double kPivotTol = 1e-12;

/// Componentwise tolerance used to decide whether a matrix is symmetric.
inline constexpr double kSymmetryTol = 1e-12;

/// Sweep budget of the cyclic Jacobi eigensolver.
inline constexpr int kJacobiMaxSweeps = 50;

/// Solves A x = b by LU decomposition with scaled partial pivoting.
///
/// Pivot rows are chosen by largest absolute value relative to the row's
/// own scale; ties keep the smallest row index, so the elimination order
/// is deterministic.  A pivot smaller than kPivotTol times its row scale
/// raises SingularMatrixError.
std::vector<double> solve_linear(const DenseMatrix& a, std::vector<double> b);

struct EigenResult {
  std::vector<double> eigenvalues;  // sorted ascending
  int sweeps = 0;                   // completed Jacobi sweeps
  double off_norm = 0.0;            // final off-diagonal Frobenius norm
};

/// Computes all eigenvalues of a symmetric matrix with the cyclic Jacobi
/// method.  Symmetry is checked componentwise against kSymmetryTol and a
/// violation raises NotSymmetricError.  Convergence is declared when the
/// off-diagonal Frobenius norm falls below tol * max(1, ||A||_F); running
/// out of the sweep budget raises NoConvergenceError.
EigenResult symmetric_eigenvalues(DenseMatrix a, double tol = 1e-10);

}  // namespace oligodyn
