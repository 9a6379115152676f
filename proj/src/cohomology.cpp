#include "lich/cohomology.hpp"

#include "lich/error.hpp"

namespace lich {

namespace {

void require_rational(const Algebra& alg) {
  if (!alg.mode().is_rational())
    throw Error(ErrorKind::ParamModeUnsupported,
                "cohomology needs rational mode; instantiate the parameters first");
}

std::size_t rank_of_dw(const Algebra& alg, const TwistedDifferential& dw, int from) {
  const int n = static_cast<int>(alg.size());
  if (from < 0 || from >= n) return 0;
  return rank(operator_matrix(alg.basis(), from, from + 1, dw));
}

void require_twisted_closed(const TwistedDifferential& dw, const Form& theta) {
  require_same_basis(dw.algebra().basis(), theta.basis());
  Form residual = dw(theta);
  if (!residual.is_zero())
    throw Error(ErrorKind::NotClosed, "d_omega(theta) = " + residual.to_string());
}

// ker d_omega intersected with the orthogonal complement of im d_omega. It
// equals the harmonic space on unimodular algebras and represents the
// cohomology on every algebra.
HarmonicSpace representatives(const Algebra& alg, const TwistedDifferential& dw, int degree) {
  if (is_unimodular(alg)) return harmonic_space(alg, dw.omega(), degree);
  const auto& basis = alg.basis();
  const int n = static_cast<int>(alg.size());
  const auto monomials = monomial_basis(alg.size(), degree);
  Matrix stacked(0, monomials.size(), alg.mode());
  if (degree < n) stacked = Matrix::stack(stacked, operator_matrix(basis, degree, degree + 1, dw));
  if (degree > 0) {
    const auto sources = monomial_basis(alg.size(), degree - 1);
    Matrix orth(sources.size(), monomials.size(), alg.mode());
    for (std::size_t r = 0; r < sources.size(); ++r) {
      const Form image = dw(Form::monomial(basis, sources[r]));
      for (std::size_t c = 0; c < monomials.size(); ++c) orth(r, c) = inner(alg, image, Form::monomial(basis, monomials[c]));
    }
    stacked = Matrix::stack(stacked, orth);
  }
  HarmonicSpace h{degree, dw.omega(), {}};
  for (const auto& v : nullspace(stacked)) h.basis.push_back(from_coordinates(basis, degree, v));
  return h;
}

}  // namespace

std::size_t betti(const Algebra& alg, const Form& omega, int degree) {
  require_rational(alg);
  alg.require_sound();
  const TwistedDifferential dw(alg, omega);
  const int n = static_cast<int>(alg.size());
  if (degree < 0 || degree > n) throw Error(ErrorKind::DegreeMismatch, "degree out of range");
  return binomial(alg.size(), degree) - rank_of_dw(alg, dw, degree) - rank_of_dw(alg, dw, degree - 1);
}

std::vector<std::size_t> CohomologyReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

bool CohomologyReport::consistent() const {
  for (const auto& d : degrees)
    if (d.betti != d.dim_harmonic) return false;
  return true;
}

CohomologyReport cohomology(const Algebra& alg, const Form& omega) {
  require_rational(alg);
  alg.require_sound();
  require_closed_omega(alg, omega);
  CohomologyReport report{omega, is_unimodular(alg), {}};
  for (int l = 0; l <= static_cast<int>(alg.size()); ++l) {
    Decomposition dec = decomposition(alg, omega, l);
    report.degrees.push_back(DegreeSummary{l, betti(alg, omega, l), dec.dim_harmonic(), dec.dim_exact(),
                                           dec.dim_coexact(), HarmonicSpace{l, omega, dec.harmonic}});
  }
  return report;
}

bool ClassCoordinates::is_zero() const { return is_zero_vector(coords); }

Form ClassCoordinates::projection() const {
  Form sum(space.omega.basis(), space.degree);
  for (std::size_t i = 0; i < coords.size(); ++i) sum = sum + scale(coords[i], space.basis[i]);
  return sum;
}

ClassCoordinates class_coords(const Algebra& alg, const Form& omega, const Form& theta) {
  require_rational(alg);
  const TwistedDifferential dw(alg, omega);
  require_twisted_closed(dw, theta);
  const int degree = theta.is_zero() ? std::max(theta.degree(), 0) : theta.degree();
  HarmonicSpace h = representatives(alg, dw, degree);
  const std::size_t k = h.dim();
  Matrix gram(k, k, alg.mode());
  std::vector<Scalar> rhs(k, alg.mode().zero());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = inner(alg, h.basis[i], h.basis[j]);
    rhs[i] = inner(alg, theta, h.basis[i]);
  }
  auto c = solve(gram, rhs);
  // The Gram matrix of an independent set is positive definite.
  if (!c) throw Error(ErrorKind::StructuralFailure, "singular Gram matrix for harmonic basis");
  return ClassCoordinates{std::move(h), std::move(*c)};
}

ExactnessCertificate primitive(const Algebra& alg, const Form& omega, const Form& theta) {
  require_rational(alg);
  alg.require_sound();
  const TwistedDifferential dw(alg, omega);
  require_twisted_closed(dw, theta);
  const int l = theta.degree();
  if (theta.is_zero()) return ExactWithPrimitive{Form(theta.basis(), std::max(l - 1, 0))};
  if (l == 0) return NotExact{class_coords(alg, omega, theta)};
  const Matrix m = operator_matrix(alg.basis(), l - 1, l, dw);
  auto x = solve(m, to_coordinates(theta, l));
  if (!x) return NotExact{class_coords(alg, omega, theta)};
  Form prim = from_coordinates(alg.basis(), l - 1, *x);
  if (!(dw(prim) == theta))
    throw Error(ErrorKind::StructuralFailure, "primitive does not reproduce its target");
  return ExactWithPrimitive{std::move(prim)};
}

}  // namespace lich
