#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lich/polynomial.hpp"

namespace lich {

class Scalar;

// Either plain rationals, or rational functions over a declared, ordered list
// of parameter symbols. The symbol order fixes the monomial order.
class ScalarMode {
 public:
  ScalarMode() = default;  // rational mode
  static ScalarMode rational() { return ScalarMode(); }
  static ScalarMode params(std::vector<std::string> symbols);

  bool is_rational() const { return symbols_ == nullptr; }
  std::span<const std::string> symbols() const;
  std::optional<std::size_t> symbol_index(std::string_view name) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar constant(const Rational& value) const;
  // Throws UndeclaredParameter.
  Scalar symbol(std::string_view name) const;

  std::string to_string() const;

  friend bool operator==(const ScalarMode& a, const ScalarMode& b);

 private:
  std::shared_ptr<const std::vector<std::string>> symbols_;
};

// Quotient of polynomials kept coprime, with the denominator primitive
// (coprime integer coefficients, positive first term).
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);
  // num and den already coprime; only the denominator content is normalized.
  static RationalFunction coprime(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  std::optional<Rational> constant_value() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  struct Coprime {};
  RationalFunction(Polynomial num, Polynomial den, Coprime);

  Polynomial num_;
  Polynomial den_;
};

// Exact coefficient. Values are immutable; arithmetic between different modes
// throws MixedModes.
class Scalar {
 public:
  Scalar() : Scalar(Rational(0)) {}
  Scalar(Rational value);  // rational mode
  Scalar(long value) : Scalar(Rational(value)) {}
  Scalar(const ScalarMode& mode, RationalFunction value);

  const ScalarMode& mode() const { return mode_; }
  bool is_zero() const;
  bool is_one() const;

  // Value when the scalar does not depend on any parameter.
  std::optional<Rational> constant_value() const;
  // Rational-mode payload; throws ParamModeUnsupported otherwise.
  const Rational& rational() const;
  const RationalFunction& function() const { return *func_; }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar pow(std::uint32_t e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  // Canonical text: "p/q" for rationals, "num" or "(num)/(den)" otherwise.
  std::string to_string() const;

 private:
  ScalarMode mode_;
  Rational rat_;
  std::optional<RationalFunction> func_;
};

enum class ArithOp { Add, Sub, Mul, Div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power)*
//   power  := factor ['^' integer]
//   factor := integer | identifier | '(' expr ')'
// Identifiers must be declared parameters of `mode`.
Scalar parse_scalar(std::string_view text, const ScalarMode& mode);

}  // namespace lich
