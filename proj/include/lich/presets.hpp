#pragma once

#include <vector>

#include "lich/algebra.hpp"

namespace lich {

// n != 0 (an integer in rational mode), k != 0, lambda != 0.
struct AcfmParams {
  Scalar n;
  Scalar k;
  Scalar lambda;
};

// Symbols available in the symbolic ACFM preset, in monomial order.
ScalarMode acfm_param_mode();

// The ACFM four-manifold's invariant coframe (alpha, beta, gamma, eta) with
// d alpha = -k alpha^gamma, d beta = k beta^gamma, d gamma = 0,
// d eta = n lambda alpha^beta, and the metric making the coframe orthonormal.
class Acfm {
 public:
  static constexpr std::size_t kAlpha = 0, kBeta = 1, kGamma = 2, kEta = 3;
  static const std::vector<std::string>& frame_names();  // X, Y, Z, T

  explicit Acfm(AcfmParams params);
  static Acfm rational(const Rational& n, const Rational& k, const Rational& lambda);
  // n, k, lambda as formal symbols of acfm_param_mode().
  static Acfm symbolic();

  const AcfmParams& params() const { return params_; }
  const Algebra& algebra() const { return algebra_; }
  const ScalarMode& mode() const { return algebra_.mode(); }

  Form alpha() const { return algebra_.generator(kAlpha); }
  Form beta() const { return algebra_.generator(kBeta); }
  Form gamma() const { return algebra_.generator(kGamma); }
  Form eta() const { return algebra_.generator(kEta); }
  Form two_form(std::size_t i, std::size_t j) const;

  // -k gamma, the Lee form of the t-family.
  Form lee_t() const;
  // +k gamma, the Lee form of the s-family.
  Form lee_s() const;

  // t1 alpha^eta + t2 beta^gamma + t3 (n lambda alpha^beta - k gamma^eta).
  Form omega_t(const Scalar& t1, const Scalar& t2, const Scalar& t3) const;
  // s1 beta^eta + s2 alpha^gamma + s3 (n lambda alpha^beta + k gamma^eta).
  Form omega_s(const Scalar& s1, const Scalar& s2, const Scalar& s3) const;
  // (t2 / 2k) beta + t3 eta: omega_t - t1 alpha^eta = d_{-k gamma} of it.
  Form omega_t_primitive(const Scalar& t2, const Scalar& t3) const;
  // (-s2 / 2k) alpha + s3 eta, for the s-family and +k gamma.
  Form omega_s_primitive(const Scalar& s2, const Scalar& s3) const;

  // d_{-k gamma}(eta) for sign < 0 and d_{+k gamma}(eta) for sign > 0,
  // computed through the twisted differential.
  Form exact_lcs(int sign) const;

  // (n lambda / k) alpha^eta + beta^gamma.
  Form lck_form() const;

  // t1 alpha^eta + growth beta^gamma + s t3 d_{-k gamma}(eta); growth stands
  // in for the exponential factor of the deformation path.
  Form moser_member(const Scalar& t1, const Scalar& growth, const Scalar& s, const Scalar& t3) const;

 private:
  Acfm(AcfmParams params, Algebra algebra) : params_(std::move(params)), algebra_(std::move(algebra)) {}
  static Algebra build(const AcfmParams& params);

  AcfmParams params_;
  Algebra algebra_;
};

}  // namespace lich
