#include "lich/presets.hpp"

#include "lich/error.hpp"

namespace lich {

ScalarMode acfm_param_mode() {
  static const ScalarMode mode =
      ScalarMode::params({"n", "k", "lambda", "t1", "t2", "t3", "s1", "s2", "s3"});
  return mode;
}

const std::vector<std::string>& Acfm::frame_names() {
  static const std::vector<std::string> names{"X", "Y", "Z", "T"};
  return names;
}

Algebra Acfm::build(const AcfmParams& p) {
  const ScalarMode& mode = p.k.mode();
  if (!(p.n.mode() == mode) || !(p.lambda.mode() == mode))
    throw Error(ErrorKind::InvalidParams, "n, k and lambda must share one scalar mode");
  if (p.n.is_zero()) throw Error(ErrorKind::InvalidParams, "n must be a nonzero integer");
  if (mode.is_rational() && !p.n.rational().is_integer())
    throw Error(ErrorKind::InvalidParams, "n must be a nonzero integer");
  if (p.k.is_zero()) throw Error(ErrorKind::InvalidParams, "k must be nonzero");
  if (p.lambda.is_zero()) throw Error(ErrorKind::InvalidParams, "lambda must be nonzero");

  auto basis = Basis::create({"alpha", "beta", "gamma", "eta"}, mode);
  auto mono = [&](std::size_t i, std::size_t j, const Scalar& c) {
    return Form::monomial(basis, (IndexMask{1} << i) | (IndexMask{1} << j), c);
  };
  std::vector<Form> dgen{
      mono(kAlpha, kGamma, -p.k),
      mono(kBeta, kGamma, p.k),
      Form(basis, 2),
      mono(kAlpha, kBeta, p.n * p.lambda),
  };
  Algebra alg(basis, std::move(dgen));
  alg.require_sound();
  return alg;
}

Acfm::Acfm(AcfmParams params) : params_(std::move(params)), algebra_(build(params_)) {}

Acfm Acfm::rational(const Rational& n, const Rational& k, const Rational& lambda) {
  return Acfm(AcfmParams{Scalar(n), Scalar(k), Scalar(lambda)});
}

Acfm Acfm::symbolic() {
  const ScalarMode mode = acfm_param_mode();
  return Acfm(AcfmParams{mode.symbol("n"), mode.symbol("k"), mode.symbol("lambda")});
}

Form Acfm::two_form(std::size_t i, std::size_t j) const {
  return wedge(algebra_.generator(i), algebra_.generator(j));
}

Form Acfm::lee_t() const { return scale(-params_.k, gamma()); }
Form Acfm::lee_s() const { return scale(params_.k, gamma()); }

Form Acfm::omega_t(const Scalar& t1, const Scalar& t2, const Scalar& t3) const {
  const auto& p = params_;
  Form exact_part = scale(p.n * p.lambda, two_form(kAlpha, kBeta)) - scale(p.k, two_form(kGamma, kEta));
  return scale(t1, two_form(kAlpha, kEta)) + scale(t2, two_form(kBeta, kGamma)) + scale(t3, exact_part);
}

Form Acfm::omega_s(const Scalar& s1, const Scalar& s2, const Scalar& s3) const {
  const auto& p = params_;
  Form exact_part = scale(p.n * p.lambda, two_form(kAlpha, kBeta)) + scale(p.k, two_form(kGamma, kEta));
  return scale(s1, two_form(kBeta, kEta)) + scale(s2, two_form(kAlpha, kGamma)) + scale(s3, exact_part);
}

Form Acfm::omega_t_primitive(const Scalar& t2, const Scalar& t3) const {
  const Scalar two_k = params_.k + params_.k;
  return scale(t2 / two_k, beta()) + scale(t3, eta());
}

Form Acfm::omega_s_primitive(const Scalar& s2, const Scalar& s3) const {
  const Scalar two_k = params_.k + params_.k;
  return scale(-s2 / two_k, alpha()) + scale(s3, eta());
}

Form Acfm::exact_lcs(int sign) const {
  if (sign == 0) throw Error(ErrorKind::InvalidInput, "sign must be -1 or +1");
  const Form lee = sign < 0 ? lee_t() : lee_s();
  Form computed = d_omega(algebra_, lee, eta());
  const auto& p = params_;
  Form displayed = scale(p.n * p.lambda, two_form(kAlpha, kBeta)) +
                   scale(sign < 0 ? -p.k : p.k, two_form(kGamma, kEta));
  if (!(computed == displayed))
    throw Error(ErrorKind::StructuralFailure, "d_omega(eta) differs from n lambda alpha^beta -/+ k gamma^eta");
  return computed;
}

Form Acfm::lck_form() const {
  const auto& p = params_;
  return omega_t(p.n * p.lambda / p.k, mode().one(), mode().zero());
}

Form Acfm::moser_member(const Scalar& t1, const Scalar& growth, const Scalar& s, const Scalar& t3) const {
  return scale(t1, two_form(kAlpha, kEta)) + scale(growth, two_form(kBeta, kGamma)) +
         scale(s * t3, exact_lcs(-1));
}

}  // namespace lich
