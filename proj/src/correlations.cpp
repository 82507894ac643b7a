#include <nqs/correlations.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace nqs {

namespace {

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

double discord_from(const Eigen::Vector3d& local, const Eigen::Matrix3d& corr) {
  const Eigen::Matrix3d k = local * local.transpose() + corr * corr.transpose();
  const double k_max = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(k, Eigen::EigenvaluesOnly).eigenvalues()(2);
  return std::max(0.0, 0.25 * (local.squaredNorm() + corr.squaredNorm() - k_max));
}

}  // namespace

const std::array<Matrix2c, 3>& pauli() {
  static const std::array<Matrix2c, 3> sigma = [] {
    const Complex i{0.0, 1.0};
    std::array<Matrix2c, 3> s;
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -i, i, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return sigma;
}

TwoQubitState TwoQubitState::make(const Matrix4c& mat) {
  const CMatrix m = mat;
  if (hermiticity_defect(m) > tol::herm) throw Error(ErrorCode::NotHermitian, "two-qubit state is not Hermitian");
  if (std::abs(mat.trace() - 1.0) > tol::trace) throw Error(ErrorCode::TraceViolation, "trace differs from 1");
  if (hermitian_eigenvalues(m)(0) < -tol::psd)
    throw Error(ErrorCode::NotPositiveSemidefinite, "two-qubit state has a negative eigenvalue");
  return TwoQubitState(mat);
}

TwoQubitState qq_embed(double p, double s) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::ParamOutOfRange, "p must lie in [0, 1]");
  if (!(s >= 0.0 && s < 1.0)) throw Error(ErrorCode::ParamOutOfRange, "s must lie in [0, 1)");
  const Eigen::Vector2cd first(1.0, 0.0);
  const Eigen::Vector2cd second(std::sqrt(s), std::sqrt(1.0 - s));
  Eigen::Vector4cd c1, c2;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      c1(2 * a + b) = first(a) * first(b);
      c2(2 * a + b) = second(a) * second(b);
    }
  const Matrix4c mat = p * c1 * c1.adjoint() + (1.0 - p) * c2 * c2.adjoint();
  return TwoQubitState::make(mat);
}

BlochDecomposition bloch_decompose(const TwoQubitState& state) {
  const auto& sigma = pauli();
  const Matrix2c id = Matrix2c::Identity();
  const Matrix4c& rho = state.mat();
  BlochDecomposition b;
  for (int k = 0; k < 3; ++k) {
    b.x(k) = (rho * kron(sigma[k], id)).trace().real();
    b.y(k) = (rho * kron(id, sigma[k])).trace().real();
    for (int l = 0; l < 3; ++l) b.t(k, l) = (rho * kron(sigma[k], sigma[l])).trace().real();
  }
  return b;
}

Matrix4c bloch_reconstruct(const BlochDecomposition& bloch) {
  const auto& sigma = pauli();
  const Matrix2c id = Matrix2c::Identity();
  Matrix4c out = Matrix4c::Identity();
  for (int k = 0; k < 3; ++k) {
    out += bloch.x(k) * kron(sigma[k], id) + bloch.y(k) * kron(id, sigma[k]);
    for (int l = 0; l < 3; ++l) out += bloch.t(k, l) * kron(sigma[k], sigma[l]);
  }
  return 0.25 * out;
}

double geometric_discord_A(const TwoQubitState& state) {
  const BlochDecomposition b = bloch_decompose(state);
  return discord_from(b.x, b.t);
}

double geometric_discord_B(const TwoQubitState& state) {
  const BlochDecomposition b = bloch_decompose(state);
  return discord_from(b.y, b.t.transpose());
}

double negativity(const TwoQubitState& state) {
  const Matrix4c& rho = state.mat();
  Matrix4c pt;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) pt(2 * a + b, 2 * a2 + b2) = rho(2 * a + b2, 2 * a2 + b);
  const Eigen::Vector4d evals = Eigen::SelfAdjointEigenSolver<Matrix4c>(pt, Eigen::EigenvaluesOnly).eigenvalues();
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    if (evals(i) < 0.0) sum -= evals(i);
  return sum;
}

Matrix4c swap_qubits(const Matrix4c& mat) {
  Eigen::Matrix4cd perm = Eigen::Matrix4cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) perm(2 * b + a, 2 * a + b) = 1.0;
  return perm * mat * perm.adjoint();
}

Matrix2c partial_trace_B(const Matrix4c& mat) {
  Matrix2c out = Matrix2c::Zero();
  for (int a = 0; a < 2; ++a)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b = 0; b < 2; ++b) out(a, a2) += mat(2 * a + b, 2 * a2 + b);
  return out;
}

double l1_coherence(const Matrix2c& mat) { return std::abs(mat(0, 1)) + std::abs(mat(1, 0)); }

void for_each_discord_row(int p_steps, int s_steps, const std::function<void(const DiscordRow&)>& sink) {
  if (p_steps < 2 || s_steps < 2) throw Error(ErrorCode::RangeError, "step counts must be at least 2");
  for (int i = 0; i < p_steps; ++i) {
    const double p = static_cast<double>(i) / (p_steps - 1);
    for (int j = 0; j < s_steps; ++j) {
      const double s = kDiscordSweepSMax * static_cast<double>(j) / (s_steps - 1);
      const TwoQubitState state = qq_embed(p, s);
      sink(DiscordRow{p, s, geometric_discord_A(state), geometric_discord_B(state), negativity(state)});
    }
  }
}

std::vector<DiscordRow> sweep_discord(int p_steps, int s_steps) {
  std::vector<DiscordRow> rows;
  rows.reserve(static_cast<std::size_t>(std::max(p_steps, 0)) * static_cast<std::size_t>(std::max(s_steps, 0)));
  for_each_discord_row(p_steps, s_steps, [&rows](const DiscordRow& r) { rows.push_back(r); });
  return rows;
}

}  // namespace nqs
