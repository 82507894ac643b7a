#include <nqs/povm.hpp>

#include <algorithm>
#include <random>

namespace nqs {

PovmSet build_povm(const GramBasis& basis, double scale) {
  // The bound carries the same slack as the PSD check so that q = λ_min
  // computed elsewhere is accepted.
  if (!(scale > 0.0) || (scale != 1.0 && scale > basis.min_eigenvalue() * (1.0 + 1e-12)))
    throw Error(ErrorCode::InvalidScale, "scale must lie in (0, min eigenvalue of G] or equal 1");

  const AmbientEmbedding emb = embed(basis);
  const CMatrix duals = dual_vectors(basis, emb);
  const Eigen::Index d = basis.dim();

  PovmSet set;
  set.scale = scale;
  CMatrix rest = CMatrix::Identity(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    CMatrix f = scale * duals.col(i) * duals.col(i).adjoint();
    rest -= f;
    set.elements.push_back(std::move(f));
  }
  set.min_eigenvalue_last = hermitian_eigenvalues(rest)(0);
  set.elements.push_back(std::move(rest));

  set.valid = set.min_eigenvalue_last >= -tol::psd;
  for (Eigen::Index i = 0; i < d && set.valid; ++i)
    set.valid = hermitian_eigenvalues(set.elements[static_cast<std::size_t>(i)])(0) >= -tol::psd;
  return set;
}

PovmProbabilities povm_probabilities(const ConventionalRep& rep, double scale) {
  const Eigen::Index d = rep.dim();
  PovmProbabilities out;
  out.values.resize(d + 1);
  for (Eigen::Index i = 0; i < d; ++i) out.values(i) = scale * rep.mat()(i, i).real();
  out.values(d) = 1.0 - scale * naive_trace(rep).real();
  out.in_range = ((out.values.array() >= -tol::trace) && (out.values.array() <= 1.0 + tol::trace)).all();
  return out;
}

ResidualState residual_pure_state(const PureState& state) {
  const CMatrix inv = dual_transform(state.basis());
  ResidualState r;
  r.coeff_dual = -state.amps();
  r.coeff_basis = -(inv * state.amps());
  // The dual basis has Gram matrix G^{-1}.
  r.norm = std::sqrt(std::max(0.0, (state.amps().adjoint() * inv * state.amps())(0, 0).real()));
  return r;
}

ProjectorSet projectors(const GramBasis& basis) {
  const AmbientEmbedding emb = embed(basis);
  const CMatrix duals = dual_vectors(basis, emb);
  const Eigen::Index d = basis.dim();

  ProjectorSet set;
  CMatrix total = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    set.projectors.push_back(emb.vectors.col(i) * duals.col(i).adjoint());
    total += set.projectors.back();
  }
  set.completeness_residual = max_abs(total - CMatrix::Identity(d, d));

  for (Eigen::Index i = 0; i < d; ++i) {
    const CMatrix& pi = set.projectors[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < d; ++j) {
      const CMatrix& pj = set.projectors[static_cast<std::size_t>(j)];
      const CMatrix expected = i == j ? pi : CMatrix::Zero(d, d);
      set.idempotence_residual = std::max(set.idempotence_residual, max_abs(pi * pj - expected));
      const CVector image = pi * emb.vectors.col(j);
      const CVector target = i == j ? CVector(emb.vectors.col(j)) : CVector::Zero(d);
      set.action_residual = std::max(set.action_residual, (image - target).cwiseAbs().maxCoeff());
    }
  }

  if (set.completeness_residual > tol::lin || set.idempotence_residual > tol::lin || set.action_residual > tol::lin)
    throw Error(ErrorCode::RelationViolated, "projector relations fail numerically");
  return set;
}

CVector pvm_probabilities(const BiorthogonalRep& rep) { return rep.mat().diagonal(); }

std::vector<std::uint64_t> monte_carlo_disintegrate(const ConventionalRep& rep, std::uint64_t n, std::uint64_t seed,
                                                    double scale) {
  const PovmProbabilities probs = povm_probabilities(rep, scale);
  if (!probs.in_range) throw Error(ErrorCode::InvalidProbabilities, "outcome probability outside [0, 1]");

  const Eigen::Index k = probs.values.size();
  std::vector<double> cumulative(static_cast<std::size_t>(k));
  double running = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    running += std::clamp(probs.values(i), 0.0, 1.0);
    cumulative[static_cast<std::size_t>(i)] = running;
  }
  // Normalize away rounding so the last bin closes at exactly 1.
  for (double& c : cumulative) c /= running;
  cumulative.back() = 1.0;

  std::mt19937_64 engine(seed);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(k), 0);
  for (std::uint64_t draw = 0; draw < n; ++draw) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    ++counts[static_cast<std::size_t>(it - cumulative.begin())];
  }
  return counts;
}

}  // namespace nqs
