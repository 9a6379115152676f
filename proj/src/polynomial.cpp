#include "lich/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lich/error.hpp"

namespace lich {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpz_class n = numerator(), d = denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, Rational(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree() == 0);
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& top = terms_.rbegin()->first;
  return std::accumulate(top.begin(), top.end(), std::uint32_t{0});
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

const std::pair<const Exponents, Rational>& Polynomial::first_term() const {
  return *terms_.begin();
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(nvars_);
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) r = r * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return r;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_class n = c.numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_class d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  Rational c{mpq_class(g, l)};
  return first_term().second.sign() < 0 ? -c : c;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  return scaled(content().inverse());
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Polynomial quotient(nvars_);
  Polynomial rest = *this;
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  Exponents shift(nvars_);
  while (!rest.is_zero()) {
    const auto& [re, rc] = *rest.terms_.rbegin();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      shift[i] = re[i] - lead_e[i];
    }
    Polynomial step(nvars_);
    step.add_term(shift, rc / lead_c);
    quotient = quotient + step;
    rest = rest - step * divisor;
  }
  return quotient;
}

std::map<std::uint32_t, Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  std::map<std::uint32_t, Polynomial> out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[var] = 0;
    auto [it, ok] = out.try_emplace(e[var], Polynomial(nvars_));
    it->second.add_term(rest, c);
  }
  return out;
}

namespace {

void append_monomial(std::ostringstream& os, const Exponents& e,
                     std::span<const std::string> symbols) {
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << symbols[i];
    if (e[i] > 1) os << '^' << e[i];
  }
}

bool is_unit_monomial(const Exponents& e) {
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

}  // namespace

std::string Polynomial::expanded_string(std::span<const std::string> symbols) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = c.abs();
    if (is_unit_monomial(e)) {
      os << mag.to_string();
    } else {
      if (!mag.is_one()) os << mag.to_string() << '*';
      append_monomial(os, e, symbols);
    }
  }
  return os.str();
}

std::string Polynomial::to_string(std::span<const std::string> symbols) const {
  if (terms_.empty()) return "0";
  if (terms_.size() == 1) return expanded_string(symbols);
  Rational c = content();
  if (c.abs().is_one()) return expanded_string(symbols);
  return c.to_string() + "*(" + primitive().expanded_string(symbols) + ")";
}

namespace {

Polynomial shift_var(const Polynomial& p, std::size_t var, std::uint32_t by) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents s = e;
    s[var] += by;
    r.add_term(s, c);
  }
  return r;
}

Polynomial leading_coeff_in(const Polynomial& p, std::size_t var) {
  auto coeffs = p.coefficients_in(var);
  return coeffs.rbegin()->second;
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const std::uint32_t db = b.degree_in(var);
  const Polynomial lb = leading_coeff_in(b, var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const std::uint32_t da = a.degree_in(var);
    Polynomial la = leading_coeff_in(a, var);
    a = (lb * a - shift_var(la, var, da - db) * b).primitive();
  }
  return a;
}

Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  for (const auto& [d, c] : p.coefficients_in(var)) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
  return *p.divide_exact(content_in(p, var));
}

// Image of p with every variable except `keep` replaced by point[i].
Polynomial restrict_to(const Polynomial& p, std::size_t keep, const std::vector<Rational>& point) {
  Polynomial r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != keep)
        for (std::uint32_t k = 0; k < e[i]; ++k) v *= point[i];
    Exponents m(p.nvars(), 0);
    m[keep] = e[keep];
    r.add_term(m, v);
  }
  return r;
}

// True when univariate images prove gcd(a, b) constant. A gcd g divides both
// leading coefficients in each variable, so at a point where those do not
// vanish, deg g <= deg gcd(images).
bool images_prove_coprime(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.nvars();
  for (std::size_t v = 0; v < n; ++v) {
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) continue;
    const Polynomial la = leading_coeff_in(a, v);
    const Polynomial lb = leading_coeff_in(b, v);
    bool decided = false;
    for (long attempt = 0; attempt < 4 && !decided; ++attempt) {
      std::vector<Rational> point;
      for (std::size_t i = 0; i < n; ++i) point.push_back(Rational(static_cast<long>(2 + 3 * i + 7 * attempt), 1 + attempt));
      if (restrict_to(la, v, point).is_zero() || restrict_to(lb, v, point).is_zero()) continue;
      if (gcd(restrict_to(a, v, point), restrict_to(b, v, point)).degree_in(v) > 0) return false;
      decided = true;
    }
    if (!decided) return false;
  }
  return true;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  const std::size_t n = a.nvars();
  std::size_t var = n;
  for (std::size_t i = 0; i < n && var == n; ++i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) var = i;
  if (var == n) return Polynomial::constant(n, Rational(1));
  std::size_t live = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) ++live;
  if (live > 1 && images_prove_coprime(a, b)) return Polynomial::constant(n, Rational(1));
  if (b.total_degree() <= a.total_degree()) {
    if (a.divide_exact(b)) return b.primitive();
  } else if (b.divide_exact(a)) {
    return a.primitive();
  }

  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  const Polynomial c = gcd(ca, cb);
  Polynomial pa = a.divide_exact(ca)->primitive();
  Polynomial pb = b.divide_exact(cb)->primitive();
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  Polynomial g(n);
  while (true) {
    if (pb.degree_in(var) == 0) {
      g = Polynomial::constant(n, Rational(1));
      break;
    }
    Polynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, var).primitive();
  }
  return (c * primitive_in(g, var)).primitive();
}

}  // namespace lich
