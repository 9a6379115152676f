#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lich/cohomology.hpp"
#include "lich/error.hpp"

namespace lich {

// Coefficient of Omega^(N/2) on the ascending volume wedge (not divided by
// (N/2)!). Pure wedge algebra, so it works over parameters too.
Scalar top_power(const Algebra& alg, const Form& omega_form);

// The unique 1-form w with d(Omega) = -w ^ Omega.
Form lee_form(const Algebra& alg, const Form& omega_form);

// Certified locally conformal symplectic form.
struct LcsForm {
  Form form;
  Form lee;
  Scalar top_power;
};

LcsForm is_lcs(const Algebra& alg, const Form& omega_form);

// (X, mu) with L_X Omega = mu Omega.
struct Automorphism {
  VectorField field;
  Scalar mu;
};

struct AutomorphismAlgebra {
  std::vector<Automorphism> basis;
};

AutomorphismAlgebra automorphism_algebra(const Algebra& alg, const LcsForm& lcs);

// l(X) = mu + lee(X), certified through d_lee(i_X Omega) = l(X) Omega.
struct LeeValue {
  Scalar value;
  Form contraction;  // i_X Omega
};

LeeValue lee_homomorphism(const Algebra& alg, const LcsForm& lcs, const VectorField& x,
                          const Scalar& mu);

// Unique X with i_X Omega = theta.
VectorField dual_field(const Algebra& alg, const LcsForm& lcs, const Form& theta);

// Both sides of "Omega is d_lee-exact iff some infinitesimal automorphism has
// l(X) != 0", computed independently.
struct ExactnessViaLee {
  ExactnessCertificate certificate;
  AutomorphismAlgebra automorphisms;
  std::vector<Scalar> lee_values;     // l on each automorphism basis element
  std::optional<std::size_t> witness; // first basis element with l != 0
  // When exact, the automorphism built from the primitive by dual_field.
  std::optional<Automorphism> constructed;

  bool exact() const { return is_exact(certificate); }
  bool consistent() const { return exact() == witness.has_value(); }
};

ExactnessViaLee exactness_via_lee(const Algebra& alg, const LcsForm& lcs);

// Comparison of two LCS forms up to constant conformal factors. Only forms
// with the same Lee form are compared by class; otherwise only the
// exact/non-exact invariant is reported.
struct ClassComparison {
  bool same_lee;
  bool exact_a;
  bool exact_b;
  std::optional<bool> cohomologous;  // set when same_lee
  // Different exactness rules out any conformal equivalence.
  bool certainly_inequivalent() const { return exact_a != exact_b; }
};

ClassComparison compare_classes(const Algebra& alg, const LcsForm& a, const LcsForm& b);

enum class MoserHypothesis { Lcs, SameLee, ExactDifference };
std::string to_string(MoserHypothesis h);

struct MoserMember {
  Scalar top_power;
  Form lee;
  std::optional<Form> primitive;  // of Omega_t - Omega_0
};

struct MoserFailure {
  std::size_t index;
  MoserHypothesis hypothesis;
  std::optional<ErrorKind> error;
  std::string message;
};

struct MoserReport {
  std::vector<MoserMember> members;
  std::optional<MoserFailure> failure;

  bool passed() const { return !failure; }
};

// Checks each member is LCS, all share the first member's Lee form, and each
// difference to the first member is d_lee-exact. Stops at the first failure.
MoserReport verify_moser_family(const Algebra& alg, const std::vector<Form>& family);

struct IntegrabilityCheck {
  bool integrable;
  Form obstruction;  // rho ^ d rho
};

IntegrabilityCheck frobenius_integrable(const Algebra& alg, const Form& rho);

struct InvolutivityCheck {
  bool involutive;
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  std::optional<VectorField> witness_bracket;
};

// Span of the chosen frame fields.
InvolutivityCheck involutive(const Algebra& alg, const std::vector<std::size_t>& fields);

struct RestrictedRank {
  std::size_t rank;
  std::vector<VectorField> kernel;
};

// Rank of the Gram matrix Omega(xi_a, xi_b) over the chosen frame fields.
RestrictedRank restricted_rank(const Algebra& alg, const Form& omega_form,
                               const std::vector<std::size_t>& fields);

}  // namespace lich
