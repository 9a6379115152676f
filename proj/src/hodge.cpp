#include "lich/hodge.hpp"

#include "lich/error.hpp"

namespace lich {

namespace {

bool odd(long v) { return (v % 2 + 2) % 2 == 1; }

void require_rational(const Algebra& alg, const char* what) {
  if (!alg.mode().is_rational())
    throw Error(ErrorKind::ParamModeUnsupported,
                std::string(what) + " needs rational mode; instantiate the parameters first");
}

std::vector<Form> column_space(const BasisPtr& basis, int degree, const Matrix& m) {
  std::vector<Form> out;
  for (std::size_t p : row_reduce(m).pivots)
    out.push_back(from_coordinates(basis, degree, m.column(p)));
  return out;
}

}  // namespace

Form star(const Algebra& alg, const Form& a) {
  require_same_basis(alg.basis(), a.basis());
  const std::size_t n = alg.size();
  const IndexMask full = alg.basis()->volume_mask();
  const Scalar& vs = alg.volume_scale();
  Form r(a.basis(), static_cast<int>(n) - a.degree());
  for (const auto& [mask, c] : a.terms()) {
    Scalar factor = vs;
    for (std::size_t i : mask_indices(mask)) factor = factor / alg.metric()[i];
    const IndexMask rest = full & ~mask;
    Scalar v = c * factor;
    r.add_term(rest, merge_sign(mask, rest) > 0 ? v : -v);
  }
  return r;
}

Form codiff(const Algebra& alg, const Form& a) {
  require_same_basis(alg.basis(), a.basis());
  alg.require_sound();
  if (a.degree() == 0) return Form(a.basis(), 0);
  const long n = static_cast<long>(alg.size()), l = a.degree();
  Form r = star(alg, d(alg, star(alg, a)));
  if (r.is_zero()) return Form(a.basis(), a.degree() - 1);
  return odd(n * l + n + 1) ? -r : r;
}

Form u_omega(const Algebra& alg, const Form& omega, const Form& a) {
  require_same_basis(alg.basis(), a.basis());
  require_same_basis(alg.basis(), omega.basis());
  if (a.degree() == 0 || omega.is_zero()) return Form(a.basis(), a.degree() == 0 ? 0 : a.degree() - 1);
  const long n = static_cast<long>(alg.size()), l = a.degree();
  Form r = star(alg, wedge(omega, star(alg, a)));
  if (r.is_zero()) return Form(a.basis(), a.degree() - 1);
  return odd(n * l + n) ? -r : r;
}

Form delta_omega(const Algebra& alg, const Form& omega, const Form& a) {
  return codiff(alg, a) + u_omega(alg, omega, a);
}

Scalar inner(const Algebra& alg, const Form& rho, const Form& nu) {
  require_same_basis(alg.basis(), rho.basis());
  require_same_basis(alg.basis(), nu.basis());
  if (rho.is_zero() || nu.is_zero()) return alg.mode().zero();
  if (rho.degree() != nu.degree())
    throw Error(ErrorKind::DegreeMismatch, "inner product of forms of different degree");
  Form top = wedge(rho, star(alg, nu));
  return top.coefficient(alg.basis()->volume_mask()) / alg.volume_scale();
}

HarmonicSpace harmonic_space(const Algebra& alg, const Form& omega, int degree) {
  require_rational(alg, "harmonic_space");
  alg.require_sound();
  const TwistedDifferential dw(alg, omega);
  const int n = static_cast<int>(alg.size());
  if (degree < 0 || degree > n) throw Error(ErrorKind::DegreeMismatch, "degree out of range");
  const auto& basis = alg.basis();
  Matrix stacked(0, binomial(alg.size(), degree), alg.mode());
  if (degree < n) stacked = Matrix::stack(stacked, operator_matrix(basis, degree, degree + 1, dw));
  if (degree > 0)
    stacked = Matrix::stack(stacked, operator_matrix(basis, degree, degree - 1, [&](const Form& f) {
                              return delta_omega(alg, omega, f);
                            }));
  HarmonicSpace h{degree, omega, {}};
  for (const auto& v : nullspace(stacked)) h.basis.push_back(from_coordinates(basis, degree, v));
  return h;
}

Decomposition decomposition(const Algebra& alg, const Form& omega, int degree) {
  require_rational(alg, "decomposition");
  const TwistedDifferential dw(alg, omega);
  const int n = static_cast<int>(alg.size());
  const auto& basis = alg.basis();
  Decomposition dec{degree, harmonic_space(alg, omega, degree).basis, {}, {}};
  if (degree > 0) dec.exact = column_space(basis, degree, operator_matrix(basis, degree - 1, degree, dw));
  if (degree < n)
    dec.coexact = column_space(basis, degree, operator_matrix(basis, degree + 1, degree, [&](const Form& f) {
                                 return delta_omega(alg, omega, f);
                               }));
  return dec;
}

AdjointnessResult check_adjointness(const Algebra& alg, const Form& omega, int degree) {
  if (!is_unimodular(alg)) return AdjointnessResult::NotApplicable;
  const TwistedDifferential dw(alg, omega);
  const std::size_t n = alg.size();
  if (degree < 0 || static_cast<std::size_t>(degree) >= n) return AdjointnessResult::Holds;
  for (IndexMask rm : monomial_basis(n, degree)) {
    const Form rho = Form::monomial(alg.basis(), rm);
    const Form drho = dw(rho);
    for (IndexMask nm : monomial_basis(n, degree + 1)) {
      const Form nu = Form::monomial(alg.basis(), nm);
      if (!(inner(alg, drho, nu) == inner(alg, rho, delta_omega(alg, omega, nu))))
        return AdjointnessResult::Fails;
    }
  }
  return AdjointnessResult::Holds;
}

}  // namespace lich
