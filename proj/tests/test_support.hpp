#pragma once

// Deterministic random bases and states for property tests.

#include <nqs/representations.hpp>

#include <random>

namespace nqs::testing {

using Rng = std::mt19937_64;

inline CMatrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal;
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

/// Gram matrix of d random unit vectors in C^d, overlaps shrunk toward zero
/// by `spread`. Draws are rejected until the smallest eigenvalue reaches
/// `min_eigenvalue`, keeping absolute-tolerance identity checks meaningful.
inline CMatrix random_gram(Rng& rng, Eigen::Index d, double spread = 0.6, double min_eigenvalue = 0.05) {
  for (;;) {
    CMatrix v = CMatrix::Identity(d, d) + spread * gaussian_matrix(rng, d, d) / std::sqrt(static_cast<double>(d));
    for (Eigen::Index j = 0; j < d; ++j) v.col(j).normalize();
    CMatrix g = v.adjoint() * v;
    for (Eigen::Index i = 0; i < d; ++i) g(i, i) = 1.0;
    g = 0.5 * (g + g.adjoint()).eval();
    if (hermitian_eigenvalues(g)(0) >= min_eigenvalue) return g;
  }
}

inline BasisPtr random_basis(Rng& rng, Eigen::Index d, double spread = 0.6, double min_eigenvalue = 0.05) {
  return new_gram(random_gram(rng, d, spread, min_eigenvalue));
}

/// Random full-rank Löwdin density matrix pulled back to conventional form.
inline ConventionalRep random_state(Rng& rng, const BasisPtr& basis) {
  const Eigen::Index d = basis->dim();
  const CMatrix w = gaussian_matrix(rng, d, d);
  CMatrix lowdin = w * w.adjoint();
  lowdin /= lowdin.trace().real();
  const CMatrix inv_root = basis->spectral_power(-0.5);
  CMatrix rho = inv_root * lowdin * inv_root;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return ConventionalRep::make(basis, rho);
}

inline CVector random_amplitudes(Rng& rng, Eigen::Index d) { return gaussian_matrix(rng, d, 1).col(0); }

inline std::vector<double> random_distribution(Rng& rng, Eigen::Index d) {
  std::exponential_distribution<double> expo;
  std::vector<double> p(static_cast<std::size_t>(d));
  double total = 0.0;
  for (double& x : p) total += (x = expo(rng));
  for (double& x : p) x /= total;
  return p;
}

/// Haar-random unitary: QR of a complex Ginibre matrix with R's diagonal
/// phases absorbed into Q.
inline CMatrix haar_unitary(Rng& rng, Eigen::Index d) {
  const CMatrix z = gaussian_matrix(rng, d, d);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

}  // namespace nqs::testing
