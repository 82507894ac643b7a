#include <nqs/representations.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace nqs {

namespace {

StateCheck check_parts(double herm, Complex trace, const CMatrix& lowdin) {
  return StateCheck{herm, trace, hermitian_eigenvalues(lowdin)(0)};
}

template <class Kind>
void require_valid(const Representation<Kind>& rep) {
  if (rep.mat().rows() != rep.basis().dim() || rep.mat().cols() != rep.basis().dim())
    throw Error(ErrorCode::InvalidShape, "state matrix does not match basis dimension");
  const StateCheck c = check(rep);
  if (!c.hermitian()) throw Error(ErrorCode::NotHermitian, "state is not Hermitian");
  if (!c.unit_trace()) throw Error(ErrorCode::TraceViolation, "state trace differs from 1");
  if (!c.positive()) throw Error(ErrorCode::NotPositiveSemidefinite, "state has a negative eigenvalue");
}

}  // namespace

template <class Kind>
Representation<Kind> Representation<Kind>::make(BasisPtr basis, CMatrix mat) {
  if (!basis) throw Error(ErrorCode::InvalidShape, "null basis");
  Representation rep(std::move(basis), std::move(mat));
  require_valid(rep);
  return rep;
}

template class Representation<ConventionalKind>;
template class Representation<BiorthogonalKind>;
template class Representation<LowdinKind>;

StateCheck check(const ConventionalRep& rep) {
  const GramBasis& b = rep.basis();
  const CMatrix root = b.spectral_power(0.5);
  return check_parts(hermiticity_defect(rep.mat()), (rep.mat() * b.gram()).trace(), root * rep.mat() * root);
}

StateCheck check(const BiorthogonalRep& rep) {
  const GramBasis& b = rep.basis();
  const CMatrix operator_form = rep.mat() * dual_transform(b);
  const CMatrix lowdin = b.spectral_power(0.5) * rep.mat() * b.spectral_power(-0.5);
  return check_parts(hermiticity_defect(operator_form), rep.mat().trace(), lowdin);
}

StateCheck check(const LowdinRep& rep) {
  return check_parts(hermiticity_defect(rep.mat()), rep.mat().trace(), rep.mat());
}

double physical_norm_squared(const GramBasis& basis, const CVector& amps) {
  return (amps.adjoint() * basis.gram() * amps)(0, 0).real();
}

PureState PureState::make(BasisPtr basis, CVector amps) {
  if (!basis || amps.size() != basis->dim())
    throw Error(ErrorCode::InvalidShape, "amplitude vector does not match basis dimension");
  const double norm2 = physical_norm_squared(*basis, amps);
  if (std::abs(norm2 - 1.0) > tol::trace)
    throw Error(ErrorCode::NormViolation, "psi† G psi = " + std::to_string(norm2));
  return PureState(std::move(basis), std::move(amps));
}

PureState PureState::normalized(BasisPtr basis, CVector amps) {
  if (!basis || amps.size() != basis->dim())
    throw Error(ErrorCode::InvalidShape, "amplitude vector does not match basis dimension");
  const double norm2 = physical_norm_squared(*basis, amps);
  if (!(norm2 > 0.0)) throw Error(ErrorCode::NormViolation, "zero vector cannot be normalized");
  amps /= std::sqrt(norm2);
  return make(std::move(basis), std::move(amps));
}

ConventionalRep from_pure(const PureState& state) {
  return ConventionalRep::make(state.basis_ptr(), state.amps() * state.amps().adjoint());
}

ConventionalRep superposition_free(std::span<const double> probs, BasisPtr basis) {
  if (!basis || static_cast<Eigen::Index>(probs.size()) != basis->dim())
    throw Error(ErrorCode::InvalidShape, "probability vector does not match basis dimension");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) throw Error(ErrorCode::InvalidDistribution, "negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > tol::trace) throw Error(ErrorCode::InvalidDistribution, "probabilities do not sum to 1");

  const Eigen::Index d = basis->dim();
  CMatrix mat = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) mat(i, i) = probs[static_cast<std::size_t>(i)];
  return ConventionalRep::make(std::move(basis), std::move(mat));
}

BiorthogonalRep conv_to_bio(const ConventionalRep& rep) {
  return BiorthogonalRep::unchecked(rep.basis_ptr(), rep.mat() * rep.basis().gram());
}

ConventionalRep bio_to_conv(const BiorthogonalRep& rep) {
  return ConventionalRep::unchecked(rep.basis_ptr(), rep.mat() * dual_transform(rep.basis()));
}

LowdinRep conv_to_lowdin(const ConventionalRep& rep) {
  const CMatrix root = rep.basis().spectral_power(0.5);
  return LowdinRep::unchecked(rep.basis_ptr(), root * rep.mat() * root);
}

ConventionalRep lowdin_to_conv(const LowdinRep& rep) {
  const CMatrix inv_root = lowdin_transform(rep.basis());
  return ConventionalRep::unchecked(rep.basis_ptr(), inv_root * rep.mat() * inv_root);
}

LowdinRep bio_to_lowdin(const BiorthogonalRep& rep) {
  const GramBasis& b = rep.basis();
  return LowdinRep::unchecked(rep.basis_ptr(), b.spectral_power(0.5) * rep.mat() * b.spectral_power(-0.5));
}

BiorthogonalRep lowdin_to_bio(const LowdinRep& rep) {
  const GramBasis& b = rep.basis();
  return BiorthogonalRep::unchecked(rep.basis_ptr(), b.spectral_power(-0.5) * rep.mat() * b.spectral_power(0.5));
}

CMatrix ambient_operator(const ConventionalRep& rep, const AmbientEmbedding& embedding) {
  return embedding.vectors * rep.mat() * embedding.vectors.adjoint();
}

Complex trace_dual(const ConventionalRep& rep) {
  const AmbientEmbedding emb = embed(rep.basis());
  const CMatrix duals = dual_vectors(rep.basis(), emb);
  const CMatrix op = ambient_operator(rep, emb);
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < rep.dim(); ++i) sum += duals.col(i).dot(op * emb.vectors.col(i));
  return sum;
}

Complex trace_gram(const ConventionalRep& rep) { return (rep.mat() * rep.basis().gram()).trace(); }

Complex naive_trace(const ConventionalRep& rep) { return rep.mat().trace(); }

CVector chirgwin_coulson(const PureState& state) {
  const CVector& psi = state.amps();
  const CMatrix& s = state.basis().gram();
  const Eigen::Index d = psi.size();
  CVector w = CVector::Zero(d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) w(i) += std::conj(psi(j)) * psi(i) * s(j, i);
  return w;
}

namespace {

bool sorted_dominance(std::vector<double> w, std::vector<double> w_prime) {
  constexpr double slack = 1e-12;
  std::sort(w.begin(), w.end(), std::greater<>());
  std::sort(w_prime.begin(), w_prime.end(), std::greater<>());
  double partial = 0.0;
  double partial_prime = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    partial += w[k];
    partial_prime += w_prime[k];
    if (partial > partial_prime + slack) return false;
  }
  return true;
}

void require_distribution(std::span<const double> w) {
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (std::abs(total - 1.0) > tol::trace) throw Error(ErrorCode::InvalidDistribution, "weights do not sum to 1");
}

}  // namespace

bool majorizes(std::span<const double> w, std::span<const double> w_prime) {
  if (w.size() != w_prime.size()) throw Error(ErrorCode::LengthMismatch, "weight vectors differ in length");
  require_distribution(w);
  require_distribution(w_prime);
  return sorted_dominance({w.begin(), w.end()}, {w_prime.begin(), w_prime.end()});
}

bool majorizes(const CVector& w, const CVector& w_prime) {
  if (w.size() != w_prime.size()) throw Error(ErrorCode::LengthMismatch, "weight vectors differ in length");
  auto real_parts = [](const CVector& v) {
    std::vector<double> out(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i).imag()) > tol::imag) throw Error(ErrorCode::ComplexWeights, "weight has imaginary part");
      out[static_cast<std::size_t>(i)] = v(i).real();
    }
    return out;
  };
  const std::vector<double> a = real_parts(w);
  const std::vector<double> b = real_parts(w_prime);
  return majorizes(std::span<const double>(a), std::span<const double>(b));
}

}  // namespace nqs
