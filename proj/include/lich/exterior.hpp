#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lich/scalar.hpp"

namespace lich {

inline constexpr std::size_t kMaxGenerators = 16;

// Bit i set <=> generator i occurs; a mask is the ascending index tuple.
using IndexMask = std::uint32_t;

class Basis;
using BasisPtr = std::shared_ptr<const Basis>;

// Ordered degree-1 generators together with the scalar mode of every
// coefficient over them. Orientation is the ascending wedge of all generators.
class Basis {
 public:
  static BasisPtr create(std::vector<std::string> names, ScalarMode mode = {});

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const ScalarMode& mode() const { return mode_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  IndexMask volume_mask() const { return static_cast<IndexMask>((1U << size()) - 1U); }

  friend bool operator==(const Basis& a, const Basis& b) {
    return a.names_ == b.names_ && a.mode_ == b.mode_;
  }

 private:
  Basis(std::vector<std::string> names, ScalarMode mode)
      : names_(std::move(names)), mode_(std::move(mode)) {}

  std::vector<std::string> names_;
  ScalarMode mode_;
};

void require_same_basis(const BasisPtr& a, const BasisPtr& b);

int mask_degree(IndexMask m);
std::vector<std::size_t> mask_indices(IndexMask m);
// Sign of the permutation sorting (a, b) into ascending order; 0 if they overlap.
int merge_sign(IndexMask a, IndexMask b);
std::size_t binomial(std::size_t n, std::size_t k);
// All masks of the given degree in lexicographic order of their tuples.
std::vector<IndexMask> monomial_basis(std::size_t n, int degree);

// Lexicographic order on ascending tuples; lower degree first.
struct TupleLess {
  bool operator()(IndexMask a, IndexMask b) const;
};

// Homogeneous invariant form: {ascending tuple -> nonzero coefficient}.
class Form {
 public:
  using TermMap = std::map<IndexMask, Scalar, TupleLess>;

  Form(BasisPtr basis, int degree);

  static Form constant(BasisPtr basis, const Scalar& value);
  static Form generator(BasisPtr basis, std::size_t index);
  static Form monomial(BasisPtr basis, IndexMask mask);
  static Form monomial(BasisPtr basis, IndexMask mask, const Scalar& coeff);
  static Form volume(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  const ScalarMode& mode() const { return basis_->mode(); }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(IndexMask mask) const;

  void add_term(IndexMask mask, const Scalar& coeff);

  Form operator-() const;
  friend Form operator+(const Form& a, const Form& b);
  friend Form operator-(const Form& a, const Form& b);
  friend Form operator*(const Scalar& c, const Form& a);

  // Zero forms compare equal regardless of degree.
  friend bool operator==(const Form& a, const Form& b);

  // Terms as "c g1^g2" in tuple order; "0" for the zero form.
  std::string to_string() const;

 private:
  BasisPtr basis_;
  int degree_;
  TermMap terms_;
};

// Constant-coefficient vector field over the frame dual to the basis.
class VectorField {
 public:
  explicit VectorField(BasisPtr basis);
  VectorField(BasisPtr basis, std::vector<Scalar> coeffs);
  static VectorField frame(BasisPtr basis, std::size_t index);

  const BasisPtr& basis() const { return basis_; }
  std::size_t size() const { return coeffs_.size(); }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Scalar& c, const VectorField& v);
  friend bool operator==(const VectorField& a, const VectorField& b);

  // Frame-name combination, e.g. "-1 T"; frame names are X1..XN unless given.
  std::string to_string(const std::vector<std::string>& frame_names = {}) const;

 private:
  BasisPtr basis_;
  std::vector<Scalar> coeffs_;
};

enum class FormOp { Add, Sub };

Form form_arith(const Form& a, const Form& b, FormOp op);
Form scale(const Scalar& c, const Form& a);
Form wedge(const Form& a, const Form& b);
Form interior(const VectorField& v, const Form& a);
// rho(v) for a 1-form rho.
Scalar pairing(const Form& one_form, const VectorField& v);
// theta(v_1, ..., v_l) for an l-form theta, by iterated interior products.
Scalar evaluate(const Form& form, const std::vector<VectorField>& fields);

}  // namespace lich
