#pragma once

#include <vector>

#include "lich/algebra.hpp"

namespace lich {

// Hodge star for the algebra's diagonal metric and ascending orientation:
// rho ^ *nu = <rho, nu> vol.
Form star(const Algebra& alg, const Form& a);

// delta = (-1)^(N l + N + 1) * d *  on l-forms; 0 on constants.
Form codiff(const Algebra& alg, const Form& a);

// U_omega = (-1)^(N l + N) * (omega ^ *) on l-forms.
Form u_omega(const Algebra& alg, const Form& omega, const Form& a);

// delta_omega = delta + U_omega.
Form delta_omega(const Algebra& alg, const Form& omega, const Form& a);

// Integral of rho ^ *nu with total volume normalized to 1.
Scalar inner(const Algebra& alg, const Form& rho, const Form& nu);

struct HarmonicSpace {
  int degree;
  Form omega;
  std::vector<Form> basis;

  std::size_t dim() const { return basis.size(); }
};

// Kernel of d_omega and delta_omega on Lambda^degree. Rational mode only.
HarmonicSpace harmonic_space(const Algebra& alg, const Form& omega, int degree);

// Summands of Lambda^l = H_omega + im d_omega + im delta_omega, each given by a
// spanning basis.
struct Decomposition {
  int degree;
  std::vector<Form> harmonic;
  std::vector<Form> exact;
  std::vector<Form> coexact;

  std::size_t dim_harmonic() const { return harmonic.size(); }
  std::size_t dim_exact() const { return exact.size(); }
  std::size_t dim_coexact() const { return coexact.size(); }
};

Decomposition decomposition(const Algebra& alg, const Form& omega, int degree);

// Adjointness <d_omega rho, nu> = <rho, delta_omega nu> only holds on
// unimodular algebras; elsewhere the check is reported as not applicable.
enum class AdjointnessResult { Holds, Fails, NotApplicable };
AdjointnessResult check_adjointness(const Algebra& alg, const Form& omega, int degree);

}  // namespace lich
