#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lich/exterior.hpp"
#include "lich/linalg.hpp"

namespace lich {

// Generator whose d^2 does not vanish, with the offending 3-form.
struct D2Failure {
  std::size_t generator;
  Form residual;
};

// Invariant exterior calculus of a Lie algebra given through its structure
// data: d of each generator as a 2-form, plus a diagonal metric
// g = sum_i metric[i] (e^i)^2. Immutable after construction.
class Algebra {
 public:
  // Empty metric means the identity.
  Algebra(BasisPtr basis, std::vector<Form> dgen, std::vector<Scalar> metric = {});

  const BasisPtr& basis() const { return basis_; }
  std::size_t size() const { return basis_->size(); }
  const ScalarMode& mode() const { return basis_->mode(); }
  const Form& dgen(std::size_t i) const { return dgen_.at(i); }
  const std::vector<Form>& dgens() const { return dgen_; }
  const std::vector<Scalar>& metric() const { return metric_; }
  bool has_identity_metric() const;
  Form generator(std::size_t i) const { return Form::generator(basis_, i); }

  // d^2 = 0 on every generator; computed once at construction.
  bool is_sound() const { return !d2_failure_; }
  const std::optional<D2Failure>& d2_failure() const { return d2_failure_; }
  // Throws StructuralFailure when d^2 != 0.
  void require_sound() const;

  // sqrt(prod metric), the coefficient of the Riemannian volume form on the
  // ascending wedge. Throws InvalidInput when it is irrational.
  const Scalar& volume_scale() const;

 private:
  BasisPtr basis_;
  std::vector<Form> dgen_;
  std::vector<Scalar> metric_;
  std::optional<Scalar> volume_scale_;
  std::optional<D2Failure> d2_failure_;
};

// Antiderivation extending the structure data; d of a constant is 0.
Form d(const Algebra& alg, const Form& a);

std::optional<D2Failure> check_d2(const Algebra& alg);

// brackets(i, j) = [X_i, X_j] for the frame dual to the generators.
class BracketTable {
 public:
  BracketTable(BasisPtr basis, std::vector<std::vector<VectorField>> table)
      : basis_(std::move(basis)), table_(std::move(table)) {}

  const BasisPtr& basis() const { return basis_; }
  std::size_t size() const { return table_.size(); }
  const VectorField& operator()(std::size_t i, std::size_t j) const { return table_[i][j]; }
  // Bilinear extension to constant-coefficient fields.
  VectorField bracket(const VectorField& u, const VectorField& v) const;

 private:
  BasisPtr basis_;
  std::vector<std::vector<VectorField>> table_;
};

// (d rho)(X_i, X_j) = -rho([X_i, X_j]).
BracketTable brackets_from_d(const Algebra& alg);

struct JacobiFailure {
  std::size_t i, j, k;
  VectorField residual;
};
std::optional<JacobiFailure> jacobi_check(const BracketTable& table);

bool is_unimodular(const Algebra& alg);

// Throws OmegaNotClosed unless omega is a d-closed 1-form (the zero form counts).
void require_closed_omega(const Algebra& alg, const Form& omega);

// d_omega = d + omega ^ . ; omega is validated once at construction.
class TwistedDifferential {
 public:
  TwistedDifferential(const Algebra& alg, Form omega);

  const Algebra& algebra() const { return *alg_; }
  const Form& omega() const { return omega_; }
  Form operator()(const Form& a) const;

 private:
  const Algebra* alg_;
  Form omega_;
};

Form d_omega(const Algebra& alg, const Form& omega, const Form& a);

// Cartan: L_v = i_v d + d i_v.
Form lie_derivative(const Algebra& alg, const VectorField& v, const Form& a);

// Coordinates of a homogeneous form in monomial_basis(N, degree).
std::vector<Scalar> to_coordinates(const Form& a, int degree);
Form from_coordinates(const BasisPtr& basis, int degree, const std::vector<Scalar>& coords);

// Matrix of a linear operator Lambda^from -> Lambda^to in monomial bases.
Matrix operator_matrix(const BasisPtr& basis, int from, int to,
                       const std::function<Form(const Form&)>& op);

}  // namespace lich
