#pragma once

#include <nqs/error.hpp>
#include <nqs/linalg.hpp>

#include <memory>

namespace nqs {

/// A normalized, linearly independent, possibly nonorthogonal basis
/// {|c_i>} described entirely by its Gram matrix G_ij = <c_i|c_j>.
///
/// Instances are immutable once validated. The Hermitian eigendecomposition
/// of G is computed at construction and reused by every matrix function.
class GramBasis {
 public:
  /// Validates `gram` and throws `Error` with NotHermitian, NotUnitDiagonal,
  /// NotPositiveDefinite or OverlapOutOfRange (checked in that order).
  explicit GramBasis(CMatrix gram);

  Eigen::Index dim() const noexcept { return gram_.rows(); }
  const CMatrix& gram() const noexcept { return gram_; }
  Complex overlap(Eigen::Index i, Eigen::Index j) const { return gram_(i, j); }

  /// Ascending eigenvalues of G.
  const RVector& eigenvalues() const noexcept { return evals_; }
  const CMatrix& eigenvectors() const noexcept { return evecs_; }
  double min_eigenvalue() const noexcept { return evals_(0); }

  /// V f(Λ) V† for the principal branch of x^exponent.
  CMatrix spectral_power(double exponent) const;

  bool is_orthonormal(double eps = tol::herm) const;

 private:
  CMatrix gram_;
  RVector evals_;
  CMatrix evecs_;
};

using BasisPtr = std::shared_ptr<const GramBasis>;

/// Shared, validated basis.
BasisPtr new_gram(CMatrix gram);

/// Column i holds |c_i> in an orthonormal ambient frame; C†C = G.
struct AmbientEmbedding {
  CMatrix vectors;
};

/// G^{-1}. Column j expands |c_j^⊥> over {|c_i>}.
CMatrix dual_transform(const GramBasis& basis);

/// G^{-1/2}. Column j expands the Löwdin vector |l_j> over {|c_i>}.
CMatrix lowdin_transform(const GramBasis& basis);

enum class GramExponent { MinusOne, MinusHalf, PlusHalf, One };

CMatrix gram_power(const GramBasis& basis, GramExponent exponent);

/// Accepts only -1, -1/2, 1/2 and 1; anything else throws UnsupportedExponent.
CMatrix gram_power(const GramBasis& basis, double exponent);

/// Cholesky gauge: G = L L†, C = L†. The first basis vector lies along the
/// first ambient axis and C is upper triangular.
AmbientEmbedding embed(const GramBasis& basis);

/// Ambient vectors of the dual basis, C G^{-1}.
CMatrix dual_vectors(const GramBasis& basis, const AmbientEmbedding& embedding);

/// Ambient vectors of the Löwdin basis, C G^{-1/2}.
CMatrix lowdin_vectors(const GramBasis& basis, const AmbientEmbedding& embedding);

/// |c_ν> = S_{μν}|c_μ> + (1 − |S_{μν}|²)|c_ν^⊥> for a two-state basis.
struct DualDecomposition {
  Complex coeff_on_partner;  // S_{μν}
  double coeff_on_dual;      // 1 − |S_{μν}|²
  double residual;           // ambient-frame reconstruction error
};

/// Indices are zero-based. Requires dim() == 2.
DualDecomposition dual_decompose(const GramBasis& basis, Eigen::Index nu, Eigen::Index mu);

}  // namespace nqs
