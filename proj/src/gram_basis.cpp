#include <nqs/gram_basis.hpp>

#include <cmath>
#include <sstream>

namespace nqs {

namespace {

std::string describe(double value) {
  std::ostringstream os;
  os.precision(6);
  os << value;
  return os.str();
}

}  // namespace

GramBasis::GramBasis(CMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() < 1 || gram_.rows() != gram_.cols())
    throw Error(ErrorCode::InvalidShape, "Gram matrix must be square with d >= 1");

  const double herm = hermiticity_defect(gram_);
  if (herm > tol::herm) throw Error(ErrorCode::NotHermitian, "max |G - G†| = " + describe(herm));

  const Eigen::Index d = gram_.rows();
  for (Eigen::Index i = 0; i < d; ++i) {
    if (std::abs(gram_(i, i) - 1.0) > tol::herm)
      throw Error(ErrorCode::NotUnitDiagonal, "G_" + std::to_string(i) + std::to_string(i) + " != 1");
  }

  // Hermitize so that the eigensolver and later products see an exactly
  // self-adjoint matrix.
  gram_ = 0.5 * (gram_ + gram_.adjoint()).eval();
  for (Eigen::Index i = 0; i < d; ++i) gram_(i, i) = 1.0;

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram_);
  evals_ = solver.eigenvalues();
  evecs_ = solver.eigenvectors();
  if (evals_(0) <= tol::pd)
    throw Error(ErrorCode::NotPositiveDefinite,
                "basis states are linearly dependent (min eigenvalue " + describe(evals_(0)) + ")");

  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i)
      if (i != j && std::abs(gram_(i, j)) >= 1.0)
        throw Error(ErrorCode::OverlapOutOfRange, "|G_ij| >= 1 off the diagonal");
}

CMatrix GramBasis::spectral_power(double exponent) const {
  const RVector powered = evals_.array().pow(exponent).matrix();
  return evecs_ * powered.asDiagonal() * evecs_.adjoint();
}

bool GramBasis::is_orthonormal(double eps) const {
  return max_abs(gram_ - CMatrix::Identity(dim(), dim())) <= eps;
}

BasisPtr new_gram(CMatrix gram) { return std::make_shared<const GramBasis>(std::move(gram)); }

CMatrix dual_transform(const GramBasis& basis) { return basis.spectral_power(-1.0); }

CMatrix lowdin_transform(const GramBasis& basis) { return basis.spectral_power(-0.5); }

CMatrix gram_power(const GramBasis& basis, GramExponent exponent) {
  switch (exponent) {
    case GramExponent::MinusOne:
      return basis.spectral_power(-1.0);
    case GramExponent::MinusHalf:
      return basis.spectral_power(-0.5);
    case GramExponent::PlusHalf:
      return basis.spectral_power(0.5);
    case GramExponent::One:
      return basis.gram();
  }
  throw Error(ErrorCode::UnsupportedExponent, "unknown exponent");
}

CMatrix gram_power(const GramBasis& basis, double exponent) {
  if (exponent == -1.0) return gram_power(basis, GramExponent::MinusOne);
  if (exponent == -0.5) return gram_power(basis, GramExponent::MinusHalf);
  if (exponent == 0.5) return gram_power(basis, GramExponent::PlusHalf);
  if (exponent == 1.0) return gram_power(basis, GramExponent::One);
  throw Error(ErrorCode::UnsupportedExponent, "exponent " + describe(exponent) + " not in {-1, -1/2, 1/2, 1}");
}

AmbientEmbedding embed(const GramBasis& basis) {
  Eigen::LLT<CMatrix> llt(basis.gram());
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::CholeskyFailure, "Gram matrix lost positive definiteness numerically");
  return AmbientEmbedding{llt.matrixL().adjoint()};
}

CMatrix dual_vectors(const GramBasis& basis, const AmbientEmbedding& embedding) {
  return embedding.vectors * dual_transform(basis);
}

CMatrix lowdin_vectors(const GramBasis& basis, const AmbientEmbedding& embedding) {
  return embedding.vectors * lowdin_transform(basis);
}

DualDecomposition dual_decompose(const GramBasis& basis, Eigen::Index nu, Eigen::Index mu) {
  if (basis.dim() != 2)
    throw Error(ErrorCode::UnsupportedDimension, "dual_decompose is defined for a pair of states (d = 2)");
  if (nu < 0 || nu >= 2 || mu < 0 || mu >= 2) throw Error(ErrorCode::IndexOutOfRange, "indices must be 0 or 1");
  if (nu == mu) throw Error(ErrorCode::SameIndex, "nu and mu must differ");

  const Complex s = basis.overlap(mu, nu);
  const double dual_coeff = 1.0 - std::norm(s);

  const AmbientEmbedding emb = embed(basis);
  const CMatrix duals = dual_vectors(basis, emb);
  const CVector rebuilt = s * emb.vectors.col(mu) + dual_coeff * duals.col(nu);
  const double residual = (rebuilt - emb.vectors.col(nu)).norm();
  if (residual > tol::lin)
    throw Error(ErrorCode::RelationViolated, "dual decomposition residual " + describe(residual));
  return DualDecomposition{s, dual_coeff, residual};
}

}  // namespace nqs
