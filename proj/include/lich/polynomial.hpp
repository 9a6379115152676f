#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lich {

// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}
  Rational(long num, long den);
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;
  // Exact square root when both numerator and denominator are perfect squares.
  std::optional<Rational> sqrt() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "p/q", or "p" when q = 1.
  std::string to_string() const;

 private:
  mpq_class value_;
};

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic order; the first variable is the most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial with rational coefficients over a fixed number of
// variables. Terms are kept in ascending graded-lex order without zeros.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term value (0 if absent).
  Rational constant_term() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  // Lowest term in the canonical order (the first one printed).
  const std::pair<const Exponents, Rational>& first_term() const;

  void add_term(const Exponents& exps, const Rational& c);

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(std::uint32_t e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Rational c with self = c * p, where p has coprime integer coefficients
  // and a positive first term. Zero for the zero polynomial.
  Rational content() const;
  Polynomial primitive() const;

  // Exact quotient; nullopt when divisor does not divide self.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  // Coefficients as a polynomial in `var`; keys are powers of var.
  std::map<std::uint32_t, Polynomial> coefficients_in(std::size_t var) const;

  std::string to_string(std::span<const std::string> symbols) const;

 private:
  std::string expanded_string(std::span<const std::string> symbols) const;

  std::size_t nvars_;
  TermMap terms_;
};

// Greatest common divisor normalized as by primitive(); gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace lich
