#pragma once

#include <Eigen/Dense>

#include <complex>

namespace nqs {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

namespace tol {
// Hermiticity and unit-diagonal checks on Gram and state matrices.
inline constexpr double herm = 1e-10;
// Smallest admissible Gram eigenvalue.
inline constexpr double pd = 1e-10;
// Residuals of algebraic identities.
inline constexpr double lin = 1e-9;
// Unit-trace and unit-norm checks.
inline constexpr double trace = 1e-9;
// Smallest admissible eigenvalue of a density matrix.
inline constexpr double psd = 1e-8;
// Clipping bound for rounding artifacts in absolute-value sums.
inline constexpr double meas = 1e-12;
// Largest imaginary part tolerated on weights that must be real.
inline constexpr double imag = 1e-10;
}  // namespace tol

inline double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double hermiticity_defect(const CMatrix& m) { return max_abs(m - m.adjoint()); }

// Sum of |m_ij| over i != j.
inline double offdiag_l1(const CMatrix& m) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j) sum += std::abs(m(i, j));
  return sum;
}

// Eigenvalues of the Hermitian part of m, ascending.
inline RVector hermitian_eigenvalues(const CMatrix& m) {
  const CMatrix h = 0.5 * (m + m.adjoint());
  return Eigen::SelfAdjointEigenSolver<CMatrix>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

}  // namespace nqs
