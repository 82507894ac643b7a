#pragma once

#include <nqs/representations.hpp>

namespace nqs {

/// ℓ1 superposition measures of one state.
struct MeasureReport {
  double l1_inter = 0.0;
  double l1_intra = 0.0;
  double l1_genuine = 0.0;
  /// l1_inter + l1_intra − l1_genuine, unclipped.
  double additivity_gap = 0.0;

  /// Values with rounding negatives below tol::meas clipped to zero.
  MeasureReport clipped() const;
};

/// Λ(ρ): keeps the diagonal. The result is generally not a valid state.
ConventionalRep dephase(const ConventionalRep& rep);

/// Inter-basis superposition, Σ_{i≠j} |ρ_ij|.
double l1_inter(const ConventionalRep& rep);

/// Intra-basis superposition (indistinguishability), off-diagonal ℓ1 of Λ(ρ)G.
double l1_intra(const ConventionalRep& rep);

/// Genuine superposition, Σ_{i≠j} |ρ̄_ij|.
double l1_genuine(const BiorthogonalRep& rep);
double l1_genuine(const ConventionalRep& rep);

MeasureReport measure(const ConventionalRep& rep);

/// Splits the off-diagonal of ρ̄ = ρG into
///   T1_ij = ρ_ij, T2_ij = ρ_ii G_ij, T3_ij = Σ_{k∉{i,j}} ρ_ik G_kj
/// (diagonals zero), so that T1 + T2 + T3 equals ρ̄ off the diagonal.
struct DecompositionTerms {
  CMatrix inter;
  CMatrix intra;
  CMatrix synergy;
};

DecompositionTerms decomposition_terms(const ConventionalRep& rep);

/// N(p|c1><c1| + (1−p)|c2><c2| + λ|c1><c2| + λ*|c2><c1|) over a two-state
/// basis with <c1|c2> = s, N = 1/(1 + λs* + sλ*). Positivity is not
/// enforced, only normalizability (throws NotNormalizable).
ConventionalRep two_level_state(double p, Complex s, Complex lambda);

/// Closed form of the three measures for `two_level_state(p, s, λ)`.
MeasureReport two_level_closed_form(double p, Complex s, Complex lambda);

}  // namespace nqs
