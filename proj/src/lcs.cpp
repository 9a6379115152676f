#include "lich/lcs.hpp"

#include <set>

namespace lich {

namespace {

void require_two_form(const Algebra& alg, const Form& f) {
  require_same_basis(alg.basis(), f.basis());
  if (!f.is_zero() && f.degree() != 2) throw Error(ErrorKind::DegreeMismatch, "expected a 2-form");
}

void require_rational(const Algebra& alg, const char* what) {
  if (!alg.mode().is_rational())
    throw Error(ErrorKind::ParamModeUnsupported,
                std::string(what) + " needs rational mode; instantiate the parameters first");
}

void require_frame_subset(const Algebra& alg, const std::vector<std::size_t>& fields) {
  std::set<std::size_t> seen;
  for (auto f : fields) {
    if (f >= alg.size()) throw Error(ErrorKind::InvalidInput, "frame index out of range");
    if (!seen.insert(f).second) throw Error(ErrorKind::InvalidInput, "frame fields must be distinct");
  }
}

}  // namespace

Scalar top_power(const Algebra& alg, const Form& omega_form) {
  require_two_form(alg, omega_form);
  const std::size_t n = alg.size();
  if (n % 2 != 0) throw Error(ErrorKind::OddDimension, "top power needs an even number of generators");
  Form power = Form::constant(alg.basis(), alg.mode().one());
  for (std::size_t i = 0; i < n / 2; ++i) power = wedge(power, omega_form);
  return power.coefficient(alg.basis()->volume_mask());
}

Form lee_form(const Algebra& alg, const Form& omega_form) {
  require_two_form(alg, omega_form);
  const std::size_t n = alg.size();
  if (n < 4) throw Error(ErrorKind::Degenerate, "Lee form is only determined in dimension >= 4");
  const Scalar pf = top_power(alg, omega_form);
  if (pf.is_zero()) throw Error(ErrorKind::Degenerate, "top-power coefficient is 0");
  // w ^ Omega = -d Omega, linear in the coefficients of w.
  const Matrix m = operator_matrix(alg.basis(), 1, 3, [&](const Form& e) { return wedge(e, omega_form); });
  const Form rhs = -d(alg, omega_form);
  auto w = solve(m, to_coordinates(rhs, 3));
  if (!w) throw Error(ErrorKind::NoSolution, "d(Omega) is not of the form -w ^ Omega");
  Form lee = from_coordinates(alg.basis(), 1, *w);
  Form dlee = d(alg, lee);
  if (!dlee.is_zero())
    throw Error(ErrorKind::LeeNotClosed, "candidate Lee form " + lee.to_string() + " has d = " + dlee.to_string());
  return lee;
}

LcsForm is_lcs(const Algebra& alg, const Form& omega_form) {
  Form lee = lee_form(alg, omega_form);
  return LcsForm{omega_form, std::move(lee), top_power(alg, omega_form)};
}

AutomorphismAlgebra automorphism_algebra(const Algebra& alg, const LcsForm& lcs) {
  require_rational(alg, "automorphism_algebra");
  const std::size_t n = alg.size();
  const auto monos = monomial_basis(n, 2);
  // Unknowns (X_1..X_N, mu): sum_i X_i L_{e_i} Omega - mu Omega = 0.
  Matrix m(monos.size(), n + 1, alg.mode());
  for (std::size_t i = 0; i < n; ++i) {
    Form li = lie_derivative(alg, VectorField::frame(alg.basis(), i), lcs.form);
    for (std::size_t r = 0; r < monos.size(); ++r) m(r, i) = li.coefficient(monos[r]);
  }
  for (std::size_t r = 0; r < monos.size(); ++r) m(r, n) = -lcs.form.coefficient(monos[r]);
  AutomorphismAlgebra out;
  for (auto& v : nullspace(m)) {
    Scalar mu = v[n];
    v.pop_back();
    out.basis.push_back(Automorphism{VectorField(alg.basis(), std::move(v)), std::move(mu)});
  }
  return out;
}

LeeValue lee_homomorphism(const Algebra& alg, const LcsForm& lcs, const VectorField& x,
                          const Scalar& mu) {
  require_same_basis(alg.basis(), x.basis());
  if (!(lie_derivative(alg, x, lcs.form) == scale(mu, lcs.form)))
    throw Error(ErrorKind::NotAutomorphism, "L_X Omega != mu Omega");
  Scalar l = mu + pairing(lcs.lee, x);
  Form theta = interior(x, lcs.form);
  if (!(d_omega(alg, lcs.lee, theta) == scale(l, lcs.form)))
    throw Error(ErrorKind::StructuralFailure, "d_lee(i_X Omega) != l(X) Omega");
  return LeeValue{std::move(l), std::move(theta)};
}

VectorField dual_field(const Algebra& alg, const LcsForm& lcs, const Form& theta) {
  require_same_basis(alg.basis(), theta.basis());
  if (!theta.is_zero() && theta.degree() != 1) throw Error(ErrorKind::DegreeMismatch, "theta must be a 1-form");
  const std::size_t n = alg.size();
  Matrix m(n, n, alg.mode());
  for (std::size_t j = 0; j < n; ++j) {
    Form col = interior(VectorField::frame(alg.basis(), j), lcs.form);
    for (std::size_t r = 0; r < n; ++r) m(r, j) = col.coefficient(IndexMask{1} << r);
  }
  if (rank(m) < n) throw Error(ErrorKind::Degenerate, "Omega is degenerate; i_X Omega = theta has no unique solution");
  auto x = solve(m, to_coordinates(theta, 1));
  VectorField v(alg.basis(), std::move(*x));
  if (!(interior(v, lcs.form) == theta))
    throw Error(ErrorKind::StructuralFailure, "dual field does not reproduce theta");
  return v;
}

ExactnessViaLee exactness_via_lee(const Algebra& alg, const LcsForm& lcs) {
  require_rational(alg, "exactness_via_lee");
  ExactnessViaLee out{primitive(alg, lcs.lee, lcs.form), automorphism_algebra(alg, lcs), {}, std::nullopt,
                      std::nullopt};
  for (std::size_t i = 0; i < out.automorphisms.basis.size(); ++i) {
    const auto& a = out.automorphisms.basis[i];
    out.lee_values.push_back(lee_homomorphism(alg, lcs, a.field, a.mu).value);
    if (!out.witness && !out.lee_values.back().is_zero()) out.witness = i;
  }
  if (const auto* ex = std::get_if<ExactWithPrimitive>(&out.certificate)) {
    VectorField x = dual_field(alg, lcs, ex->primitive);
    Scalar mu = alg.mode().one() - pairing(lcs.lee, x);
    out.constructed = Automorphism{std::move(x), std::move(mu)};
  }
  return out;
}

ClassComparison compare_classes(const Algebra& alg, const LcsForm& a, const LcsForm& b) {
  ClassComparison c{a.lee == b.lee, is_exact(primitive(alg, a.lee, a.form)),
                    is_exact(primitive(alg, b.lee, b.form)), std::nullopt};
  if (c.same_lee) c.cohomologous = is_exact(primitive(alg, a.lee, a.form - b.form));
  return c;
}

std::string to_string(MoserHypothesis h) {
  switch (h) {
    case MoserHypothesis::Lcs: return "locally conformal symplectic";
    case MoserHypothesis::SameLee: return "same Lee form";
    case MoserHypothesis::ExactDifference: return "d_omega-exact difference";
  }
  return "unknown";
}

MoserReport verify_moser_family(const Algebra& alg, const std::vector<Form>& family) {
  require_rational(alg, "verify_moser_family");
  if (family.empty()) throw Error(ErrorKind::InvalidInput, "empty family");
  MoserReport report;
  std::optional<LcsForm> base;
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::optional<LcsForm> certified;
    try {
      certified = is_lcs(alg, family[i]);
    } catch (const Error& e) {
      report.failure = MoserFailure{i, MoserHypothesis::Lcs, e.kind(), e.what()};
      return report;
    }
    const LcsForm& member = *certified;
    if (!base) base = member;
    if (!(member.lee == base->lee)) {
      report.failure = MoserFailure{i, MoserHypothesis::SameLee, std::nullopt,
                                    "Lee form " + member.lee.to_string() + " differs from " + base->lee.to_string()};
      return report;
    }
    MoserMember row{member.top_power, member.lee, std::nullopt};
    auto cert = primitive(alg, base->lee, member.form - base->form);
    if (auto* ex = std::get_if<ExactWithPrimitive>(&cert)) {
      row.primitive = ex->primitive;
    } else {
      report.members.push_back(row);
      report.failure = MoserFailure{i, MoserHypothesis::ExactDifference, std::nullopt,
                                    "difference to the first member is not d_omega-exact"};
      return report;
    }
    report.members.push_back(std::move(row));
  }
  return report;
}

IntegrabilityCheck frobenius_integrable(const Algebra& alg, const Form& rho) {
  require_same_basis(alg.basis(), rho.basis());
  if (rho.is_zero()) throw Error(ErrorKind::ZeroForm, "integrability of the zero form");
  if (rho.degree() != 1) throw Error(ErrorKind::DegreeMismatch, "expected a 1-form");
  Form obstruction = wedge(rho, d(alg, rho));
  return IntegrabilityCheck{obstruction.is_zero(), std::move(obstruction)};
}

InvolutivityCheck involutive(const Algebra& alg, const std::vector<std::size_t>& fields) {
  require_frame_subset(alg, fields);
  const BracketTable t = brackets_from_d(alg);
  std::vector<bool> in_span(alg.size(), false);
  for (auto f : fields) in_span[f] = true;
  for (std::size_t a = 0; a < fields.size(); ++a)
    for (std::size_t b = a + 1; b < fields.size(); ++b) {
      const VectorField& br = t(fields[a], fields[b]);
      for (std::size_t k = 0; k < alg.size(); ++k)
        if (!in_span[k] && !br[k].is_zero())
          return InvolutivityCheck{false, std::make_pair(fields[a], fields[b]), br};
    }
  return InvolutivityCheck{true, std::nullopt, std::nullopt};
}

RestrictedRank restricted_rank(const Algebra& alg, const Form& omega_form,
                               const std::vector<std::size_t>& fields) {
  require_two_form(alg, omega_form);
  require_frame_subset(alg, fields);
  const std::size_t k = fields.size();
  Matrix gram(k, k, alg.mode());
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      gram(a, b) = evaluate(omega_form, {VectorField::frame(alg.basis(), fields[a]),
                                         VectorField::frame(alg.basis(), fields[b])});
  RestrictedRank out{rank(gram), {}};
  for (const auto& v : nullspace(gram)) {
    VectorField x(alg.basis());
    for (std::size_t a = 0; a < k; ++a) x = x + v[a] * VectorField::frame(alg.basis(), fields[a]);
    out.kernel.push_back(std::move(x));
  }
  return out;
}

}  // namespace lich
