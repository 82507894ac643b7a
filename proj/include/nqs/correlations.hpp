#pragma once

#include <nqs/error.hpp>
#include <nqs/linalg.hpp>

#include <array>
#include <functional>
#include <vector>

namespace nqs {

using Matrix4c = Eigen::Matrix4cd;
using Matrix2c = Eigen::Matrix2cd;

/// Two-qubit density matrix in the product frame A ⊗ B (index 2a + b).
class TwoQubitState {
 public:
  /// Throws NotHermitian, TraceViolation or NotPositiveSemidefinite.
  static TwoQubitState make(const Matrix4c& mat);
  static TwoQubitState unchecked(const Matrix4c& mat) { return TwoQubitState(mat); }

  const Matrix4c& mat() const noexcept { return mat_; }

 private:
  explicit TwoQubitState(const Matrix4c& mat) : mat_(mat) {}
  Matrix4c mat_;
};

/// ρ = (𝟙 + x·σ⊗𝟙 + 𝟙⊗y·σ + Σ T_kl σ_k⊗σ_l) / 4.
struct BlochDecomposition {
  Eigen::Vector3d x;
  Eigen::Vector3d y;
  Eigen::Matrix3d t;
};

const std::array<Matrix2c, 3>& pauli();

/// p|a1 b1><a1 b1| + (1−p)|a2 b2><a2 b2| with |a1> = |b1> = |0> and
/// |a2> = |b2> = (√s, √(1−s)), so that the product states overlap by s.
/// Requires p ∈ [0, 1] and s ∈ [0, 1); throws ParamOutOfRange.
TwoQubitState qq_embed(double p, double s);

BlochDecomposition bloch_decompose(const TwoQubitState& state);
Matrix4c bloch_reconstruct(const BlochDecomposition& bloch);

/// Hilbert–Schmidt geometric discord with the 1/4 convention:
/// D_A = (‖x‖² + ‖T‖²_F − k_max) / 4, k_max the top eigenvalue of xxᵀ + TTᵀ.
/// Equals min ‖ρ − χ‖²_F over states classical on A.
double geometric_discord_A(const TwoQubitState& state);
/// Same with the subsystems exchanged (y and Tᵀ).
double geometric_discord_B(const TwoQubitState& state);

/// Sum of |negative eigenvalues| of the partial transpose on B.
double negativity(const TwoQubitState& state);

/// Exchanges the two qubits.
Matrix4c swap_qubits(const Matrix4c& mat);

Matrix2c partial_trace_B(const Matrix4c& mat);

/// Σ_{i≠j} |m_ij|.
double l1_coherence(const Matrix2c& mat);

struct DiscordRow {
  double p = 0.0;
  double s = 0.0;
  double discord_A = 0.0;
  double discord_B = 0.0;
  double negativity = 0.0;
};

inline constexpr double kDiscordSweepSMax = 0.99;

/// p ∈ [0, 1] in p_steps points (outer), s ∈ [0, 0.99] in s_steps points
/// (inner). Rows are delivered to `sink` in that order. Throws RangeError
/// when either step count is below 2.
void for_each_discord_row(int p_steps, int s_steps, const std::function<void(const DiscordRow&)>& sink);
std::vector<DiscordRow> sweep_discord(int p_steps, int s_steps);

}  // namespace nqs
