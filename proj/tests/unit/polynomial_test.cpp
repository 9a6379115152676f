#include <gtest/gtest.h>

#include <random>

#include "lich/polynomial.hpp"

using namespace lich;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Polynomial x() { return Polynomial::variable(2, 0); }
Polynomial y() { return Polynomial::variable(2, 1); }
Polynomial c(long v) { return Polynomial::constant(2, Rational(v)); }

Polynomial random_poly(std::mt19937& rng, std::size_t nvars, std::uint32_t max_degree) {
  std::uniform_int_distribution<int> coeff(-3, 3), exp(0, static_cast<int>(max_degree));
  Polynomial p(nvars);
  for (int t = 0; t < 4; ++t) {
    Exponents e(nvars, 0);
    std::uint32_t total = 0;
    for (auto& v : e) {
      v = static_cast<std::uint32_t>(exp(rng));
      total += v;
    }
    if (total <= max_degree) p.add_term(e, Rational(coeff(rng)));
  }
  return p;
}

}  // namespace

TEST(Polynomial, PrintsLowestTermFirst) {
  EXPECT_EQ((x() * y() - c(3) * y().pow(3)).to_string(kXY), "x*y - 3*y^3");
  EXPECT_EQ(Polynomial(2).to_string(kXY), "0");
}

TEST(Polynomial, ContentAndPrimitivePart) {
  const Polynomial p = c(4) * x() - c(6) * y();
  EXPECT_EQ(p.content(), Rational(-2));
  EXPECT_EQ(p.to_string(kXY), "-2*(3*y - 2*x)");
}

TEST(Polynomial, GcdOfSharedFactor) {
  const Polynomial f = x() + y();
  const Polynomial g = (x() - y()) * f;
  const Polynomial h = (x() * x() + c(1)) * f;
  const Polynomial d = gcd(g, h);
  EXPECT_TRUE(d.divide_exact(f).has_value());
  EXPECT_EQ(d.total_degree(), 1u);
}

TEST(Polynomial, DivideExact) {
  const Polynomial f = x() * x() - y() * y();
  auto q = f.divide_exact(x() - y());
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, x() + y());
  EXPECT_FALSE(f.divide_exact(x() + c(1)).has_value());
}

TEST(PolynomialProperty, RingLawsAndExactDivision) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2), c = random_poly(rng, 3, 2);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a - a).is_zero(), true);
    if (b.is_zero()) continue;
    const auto q = (a * b).divide_exact(b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
}

TEST(PolynomialProperty, GcdContainsCommonFactor) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 2), h = random_poly(rng, 3, 2);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    const Polynomial a = f * h, b = g * h;
    const Polynomial d = gcd(a, b);
    EXPECT_TRUE(d.divide_exact(h).has_value());
    EXPECT_TRUE(a.divide_exact(d).has_value());
    EXPECT_TRUE(b.divide_exact(d).has_value());
    EXPECT_EQ(d, d.primitive());
    EXPECT_EQ(gcd(b, a), d);
  }
}
