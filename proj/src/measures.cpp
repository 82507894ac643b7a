#include <nqs/measures.hpp>

namespace nqs {

namespace {

double clip(double v) { return (v < 0.0 && v > -tol::meas) ? 0.0 : v; }

double normalizer(Complex s, Complex lambda) {
  const double denom = 1.0 + 2.0 * (lambda * std::conj(s)).real();
  if (!(denom > 0.0)) throw Error(ErrorCode::NotNormalizable, "1 + λs* + sλ* must be positive");
  return 1.0 / denom;
}

}  // namespace

MeasureReport MeasureReport::clipped() const {
  return MeasureReport{clip(l1_inter), clip(l1_intra), clip(l1_genuine), additivity_gap};
}

ConventionalRep dephase(const ConventionalRep& rep) {
  CMatrix diag = rep.mat().diagonal().asDiagonal();
  return ConventionalRep::unchecked(rep.basis_ptr(), std::move(diag));
}

double l1_inter(const ConventionalRep& rep) { return offdiag_l1(rep.mat()); }

double l1_intra(const ConventionalRep& rep) {
  return offdiag_l1(dephase(rep).mat() * rep.basis().gram());
}

double l1_genuine(const BiorthogonalRep& rep) { return offdiag_l1(rep.mat()); }

double l1_genuine(const ConventionalRep& rep) { return l1_genuine(conv_to_bio(rep)); }

MeasureReport measure(const ConventionalRep& rep) {
  MeasureReport r;
  r.l1_inter = l1_inter(rep);
  r.l1_intra = l1_intra(rep);
  r.l1_genuine = l1_genuine(rep);
  r.additivity_gap = r.l1_inter + r.l1_intra - r.l1_genuine;
  return r;
}

DecompositionTerms decomposition_terms(const ConventionalRep& rep) {
  const CMatrix& rho = rep.mat();
  const CMatrix& g = rep.basis().gram();
  const Eigen::Index d = rep.dim();
  DecompositionTerms t{CMatrix::Zero(d, d), CMatrix::Zero(d, d), CMatrix::Zero(d, d)};
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (i == j) continue;
      t.inter(i, j) = rho(i, j);
      t.intra(i, j) = rho(i, i) * g(i, j);
      Complex rest = 0.0;
      for (Eigen::Index k = 0; k < d; ++k)
        if (k != i && k != j) rest += rho(i, k) * g(k, j);
      t.synergy(i, j) = rest;
    }
  }
  return t;
}

ConventionalRep two_level_state(double p, Complex s, Complex lambda) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::ParamOutOfRange, "p must lie in [0, 1]");
  CMatrix gram(2, 2);
  gram << 1.0, s, std::conj(s), 1.0;
  const double n = normalizer(s, lambda);
  CMatrix rho(2, 2);
  rho << p, lambda, std::conj(lambda), 1.0 - p;
  return ConventionalRep::unchecked(new_gram(std::move(gram)), n * rho);
}

MeasureReport two_level_closed_form(double p, Complex s, Complex lambda) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::ParamOutOfRange, "p must lie in [0, 1]");
  if (!(std::abs(s) < 1.0)) throw Error(ErrorCode::OverlapOutOfRange, "|s| must be below 1");
  const double n = normalizer(s, lambda);
  MeasureReport r;
  r.l1_inter = 2.0 * n * std::abs(lambda);
  r.l1_intra = n * std::abs(s);
  r.l1_genuine = n * (std::abs(p * s + lambda) + std::abs((1.0 - p) * s + lambda));
  r.additivity_gap = r.l1_inter + r.l1_intra - r.l1_genuine;
  return r;
}

}  // namespace nqs
