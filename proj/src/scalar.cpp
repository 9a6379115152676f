#include "lich/scalar.hpp"

#include <cctype>
#include <set>

#include "lich/error.hpp"
#include "lich/expr_parser.hpp"

namespace lich {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

ScalarMode ScalarMode::params(std::vector<std::string> symbols) {
  std::set<std::string> seen;
  for (const auto& s : symbols) {
    if (!is_identifier(s)) throw Error(ErrorKind::InvalidInput, "bad parameter name '" + s + "'");
    if (!seen.insert(s).second)
      throw Error(ErrorKind::InvalidInput, "duplicate parameter '" + s + "'");
  }
  ScalarMode m;
  m.symbols_ = std::make_shared<const std::vector<std::string>>(std::move(symbols));
  return m;
}

std::span<const std::string> ScalarMode::symbols() const {
  if (!symbols_) return {};
  return *symbols_;
}

std::optional<std::size_t> ScalarMode::symbol_index(std::string_view name) const {
  auto syms = symbols();
  for (std::size_t i = 0; i < syms.size(); ++i)
    if (syms[i] == name) return i;
  return std::nullopt;
}

Scalar ScalarMode::zero() const { return constant(Rational(0)); }
Scalar ScalarMode::one() const { return constant(Rational(1)); }

Scalar ScalarMode::constant(const Rational& value) const {
  if (is_rational()) return Scalar(value);
  const std::size_t n = symbols_->size();
  return Scalar(*this, RationalFunction(Polynomial::constant(n, value),
                                        Polynomial::constant(n, Rational(1))));
}

Scalar ScalarMode::symbol(std::string_view name) const {
  auto idx = symbol_index(name);
  if (!idx)
    throw Error(ErrorKind::UndeclaredParameter, "undeclared parameter '" + std::string(name) + "'");
  const std::size_t n = symbols_->size();
  return Scalar(*this, RationalFunction(Polynomial::variable(n, *idx),
                                        Polynomial::constant(n, Rational(1))));
}

std::string ScalarMode::to_string() const {
  if (is_rational()) return "rational";
  std::string s = "params(";
  for (std::size_t i = 0; i < symbols_->size(); ++i) {
    if (i) s += ", ";
    s += (*symbols_)[i];
  }
  return s + ")";
}

bool operator==(const ScalarMode& a, const ScalarMode& b) {
  if (a.symbols_ == b.symbols_) return true;
  if (!a.symbols_ || !b.symbols_) return false;
  return *a.symbols_ == *b.symbols_;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  const std::size_t n = den_.nvars();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(n, Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  Rational c = den_.content();
  den_ = den_.scaled(c.inverse());
  num_ = num_.scaled(c.inverse());
}

RationalFunction RationalFunction::coprime(Polynomial num, Polynomial den) {
  return RationalFunction(std::move(num), std::move(den), Coprime{});
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, Coprime)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) den_ = Polynomial::constant(den_.nvars(), Rational(1));
  Rational c = den_.content();
  den_ = den_.scaled(c.inverse());
  num_ = num_.scaled(c.inverse());
}

std::optional<Rational> RationalFunction::constant_value() const {
  if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
  return num_.constant_term() / den_.constant_term();
}

Scalar::Scalar(Rational value) : rat_(std::move(value)) {}

Scalar::Scalar(const ScalarMode& mode, RationalFunction value)
    : mode_(mode), func_(std::move(value)) {
  if (mode_.is_rational()) {
    rat_ = *func_->constant_value();
    func_.reset();
  }
}

bool Scalar::is_zero() const { return func_ ? func_->is_zero() : rat_.is_zero(); }

bool Scalar::is_one() const {
  if (!func_) return rat_.is_one();
  auto v = func_->constant_value();
  return v && v->is_one();
}

std::optional<Rational> Scalar::constant_value() const {
  if (!func_) return rat_;
  return func_->constant_value();
}

const Rational& Scalar::rational() const {
  if (func_) throw Error(ErrorKind::ParamModeUnsupported, "expected a rational-mode scalar");
  return rat_;
}

namespace {

void require_same_mode(const Scalar& a, const Scalar& b) {
  if (!(a.mode() == b.mode()))
    throw Error(ErrorKind::MixedModes,
                "cannot combine " + a.mode().to_string() + " with " + b.mode().to_string());
}

}  // namespace

Scalar Scalar::operator-() const {
  if (!func_) return Scalar(-rat_);
  return Scalar(mode_, RationalFunction(-func_->numerator(), func_->denominator()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b);
  if (!a.func_) return Scalar(a.rat_ + b.rat_);
  const auto& x = *a.func_;
  const auto& y = *b.func_;
  const Polynomial g = gcd(x.denominator(), y.denominator());
  const Polynomial xd = *x.denominator().divide_exact(g);
  const Polynomial yd = *y.denominator().divide_exact(g);
  Polynomial num = x.numerator() * yd + y.numerator() * xd;
  Polynomial den = x.denominator() * yd;
  if (num.is_zero()) return a.mode_.zero();
  const Polynomial h = gcd(num, g);
  if (!h.is_constant()) {
    num = *num.divide_exact(h);
    den = *den.divide_exact(h);
  }
  return Scalar(a.mode_, RationalFunction::coprime(std::move(num), std::move(den)));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

namespace {

RationalFunction multiply(const RationalFunction& x, const Polynomial& yn, const Polynomial& yd) {
  const Polynomial g1 = gcd(x.numerator(), yd);
  const Polynomial g2 = gcd(yn, x.denominator());
  return RationalFunction::coprime(*x.numerator().divide_exact(g1) * *yn.divide_exact(g2),
                                   *x.denominator().divide_exact(g2) * *yd.divide_exact(g1));
}

}  // namespace

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b);
  if (!a.func_) return Scalar(a.rat_ * b.rat_);
  if (a.is_zero() || b.is_zero()) return a.mode_.zero();
  return Scalar(a.mode_, multiply(*a.func_, b.func_->numerator(), b.func_->denominator()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_mode(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (!a.func_) return Scalar(a.rat_ / b.rat_);
  if (a.is_zero()) return a.mode_.zero();
  return Scalar(a.mode_, multiply(*a.func_, b.func_->denominator(), b.func_->numerator()));
}

Scalar Scalar::pow(std::uint32_t e) const {
  Scalar r = mode_.one();
  for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.mode_ == b.mode_)) return false;
  if (!a.func_) return a.rat_ == b.rat_;
  return *a.func_ == *b.func_;
}

std::string Scalar::to_string() const {
  if (!func_) return rat_.to_string();
  auto syms = mode_.symbols();
  const auto& den = func_->denominator();
  if (den.is_constant()) return func_->numerator().to_string(syms);
  return "(" + func_->numerator().to_string(syms) + ")/(" + den.to_string(syms) + ")";
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorKind::InvalidInput, "unknown arithmetic operation");
}

Scalar parse_scalar(std::string_view text, const ScalarMode& mode) {
  TokenCursor cur(tokenize(text), 0);
  Scalar s = ScalarExprParser(cur, mode).expr();
  if (!cur.at_end()) cur.fail_at(cur.peek(), "unexpected '" + cur.peek().text + "'");
  return s;
}

}  // namespace lich
