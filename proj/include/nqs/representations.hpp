#pragma once

#include <nqs/gram_basis.hpp>

#include <span>

namespace nqs {

/// Outcome of checking a representation against the density-operator axioms.
/// Positivity is always judged on the Löwdin conjugate, where the
/// representation is an ordinary density matrix.
struct StateCheck {
  double hermiticity_defect = 0.0;
  Complex trace{1.0, 0.0};
  double min_eigenvalue = 0.0;

  bool hermitian() const noexcept { return hermiticity_defect <= tol::herm; }
  bool unit_trace() const noexcept { return std::abs(trace - 1.0) <= tol::trace; }
  bool positive() const noexcept { return min_eigenvalue >= -tol::psd; }
  bool valid() const noexcept { return hermitian() && unit_trace() && positive(); }
};

/// A matrix representation of one abstract density operator, tied to the
/// basis it was expressed in. `Kind` separates the three (incompatible)
/// coefficient conventions at the type level.
template <class Kind>
class Representation {
 public:
  /// Validated construction; throws NotHermitian, TraceViolation or
  /// NotPositiveSemidefinite.
  static Representation make(BasisPtr basis, CMatrix mat);
  /// No validation; used for diagnostics and for intermediate matrices.
  static Representation unchecked(BasisPtr basis, CMatrix mat) {
    return Representation(std::move(basis), std::move(mat));
  }

  const GramBasis& basis() const noexcept { return *basis_; }
  const BasisPtr& basis_ptr() const noexcept { return basis_; }
  const CMatrix& mat() const noexcept { return mat_; }
  Eigen::Index dim() const noexcept { return mat_.rows(); }

 private:
  Representation(BasisPtr basis, CMatrix mat) : basis_(std::move(basis)), mat_(std::move(mat)) {}

  BasisPtr basis_;
  CMatrix mat_;
};

struct ConventionalKind {};   // ρ_ij  = <c_i^⊥|ρ|c_j^⊥>
struct BiorthogonalKind {};   // ρ̄_ij = <c_i^⊥|ρ|c_j>
struct LowdinKind {};         // ρ̃_ij = <l_i|ρ|l_j>

using ConventionalRep = Representation<ConventionalKind>;
using BiorthogonalRep = Representation<BiorthogonalKind>;
using LowdinRep = Representation<LowdinKind>;

StateCheck check(const ConventionalRep& rep);
StateCheck check(const BiorthogonalRep& rep);
StateCheck check(const LowdinRep& rep);

/// |ψ> = Σ_k ψ_k |c_k> with ψ†Gψ = 1.
class PureState {
 public:
  /// Throws NormViolation when |ψ†Gψ − 1| > tol::trace, InvalidShape on a
  /// length mismatch.
  static PureState make(BasisPtr basis, CVector amps);
  /// Rescales `amps` to unit physical norm first.
  static PureState normalized(BasisPtr basis, CVector amps);

  const GramBasis& basis() const noexcept { return *basis_; }
  const BasisPtr& basis_ptr() const noexcept { return basis_; }
  const CVector& amps() const noexcept { return amps_; }

 private:
  PureState(BasisPtr basis, CVector amps) : basis_(std::move(basis)), amps_(std::move(amps)) {}

  BasisPtr basis_;
  CVector amps_;
};

/// ψ†Gψ.
double physical_norm_squared(const GramBasis& basis, const CVector& amps);

ConventionalRep from_pure(const PureState& state);

/// Σ_i p_i |c_i><c_i|. Throws InvalidDistribution.
ConventionalRep superposition_free(std::span<const double> probs, BasisPtr basis);

BiorthogonalRep conv_to_bio(const ConventionalRep& rep);
ConventionalRep bio_to_conv(const BiorthogonalRep& rep);
LowdinRep conv_to_lowdin(const ConventionalRep& rep);
ConventionalRep lowdin_to_conv(const LowdinRep& rep);
LowdinRep bio_to_lowdin(const BiorthogonalRep& rep);
BiorthogonalRep lowdin_to_bio(const LowdinRep& rep);

/// ρ̂ in the ambient frame of `embedding`: C ρ C†.
CMatrix ambient_operator(const ConventionalRep& rep, const AmbientEmbedding& embedding);

/// Σ_i <c_i^⊥|ρ̂|c_i>, contracted in the ambient embedding.
Complex trace_dual(const ConventionalRep& rep);

/// tr[ρG].
Complex trace_gram(const ConventionalRep& rep);

/// tr[ρ], the total weight the d+1-outcome measurement assigns to the basis
/// states. Differs from 1 unless the state is superposition-free.
Complex naive_trace(const ConventionalRep& rep);

/// w_i = Σ_j ψ_j* ψ_i S_ji. May be complex or negative for some states.
CVector chirgwin_coulson(const PureState& state);

/// w ≺ w′: every descending partial sum of w is at most that of w′.
/// Throws LengthMismatch, InvalidDistribution (sums off 1), ComplexWeights.
bool majorizes(const CVector& w, const CVector& w_prime);
bool majorizes(std::span<const double> w, std::span<const double> w_prime);

extern template class Representation<ConventionalKind>;
extern template class Representation<BiorthogonalKind>;
extern template class Representation<LowdinKind>;

}  // namespace nqs
