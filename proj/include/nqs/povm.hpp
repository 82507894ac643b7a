#pragma once

#include <nqs/representations.hpp>

#include <cstdint>
#include <vector>

namespace nqs {

/// The d+1 operators {q|c_i^⊥><c_i^⊥|, 𝟙 − qΣ_j|c_j^⊥><c_j^⊥|} in the
/// Cholesky ambient frame. For q = 1 the last element has eigenvalues
/// 1 − 1/λ_k(G) and is PSD only when G = 𝟙; the family is built and
/// reported either way.
struct PovmSet {
  std::vector<CMatrix> elements;
  double scale = 1.0;
  double min_eigenvalue_last = 0.0;
  bool valid = false;
};

/// `scale` must lie in (0, λ_min(G)] or be exactly 1; otherwise InvalidScale.
PovmSet build_povm(const GramBasis& basis, double scale = 1.0);

/// Raw outcome probabilities (q ρ_ii for i < d, 1 − q tr[ρ] last).
struct PovmProbabilities {
  RVector values;
  /// True when every entry lies in [−tol::trace, 1 + tol::trace].
  bool in_range = false;
};

PovmProbabilities povm_probabilities(const ConventionalRep& rep, double scale = 1.0);

/// Post-measurement vector of the inconclusive outcome, −Σ_k ψ_k|c_k^⊥>,
/// and its expansion −G^{-1}ψ over {|c_k>}. Not normalized.
struct ResidualState {
  CVector coeff_dual;
  CVector coeff_basis;
  double norm = 0.0;
};

ResidualState residual_pure_state(const PureState& state);

/// Π_i = |c_i><c_i^⊥| in the ambient frame, with the residuals of
/// ΣΠ_i = 𝟙, Π_iΠ_j = δ_ijΠ_i and Π_i|c_j> = δ_ij|c_j> checked at build.
struct ProjectorSet {
  std::vector<CMatrix> projectors;
  double completeness_residual = 0.0;
  double idempotence_residual = 0.0;
  double action_residual = 0.0;
};

/// Throws RelationViolated if any relation misses tol::lin.
ProjectorSet projectors(const GramBasis& basis);

/// diag(ρ̄) = (tr[ρ̂Π_i])_i; complex values are passed through.
CVector pvm_probabilities(const BiorthogonalRep& rep);

/// Multinomial sample of n outcomes from `povm_probabilities(rep, scale)`.
///
/// Generator: std::mt19937_64 seeded with `seed`; each draw takes the top 53
/// bits of one output as u ∈ [0, 1) and selects the first outcome whose
/// cumulative probability exceeds u. Both steps are fully specified, so
/// counts are identical across platforms for a given seed.
///
/// Throws InvalidProbabilities when any probability is outside [0, 1].
std::vector<std::uint64_t> monte_carlo_disintegrate(const ConventionalRep& rep, std::uint64_t n, std::uint64_t seed,
                                                    double scale = 1.0);

}  // namespace nqs
