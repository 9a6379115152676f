#include <gtest/gtest.h>

#include "lich/error.hpp"
#include "lich/io.hpp"
#include "lich/presets.hpp"
#include "support/random_algebra.hpp"

using namespace lich;

namespace {

std::string data(const char* name) { return std::string(LICH_DATA_DIR) + "/" + name; }

struct Failure {
  ErrorKind kind;
  std::size_t line;
  std::size_t column;
};

Failure algebra_failure(std::string_view text) {
  try {
    (void)parse_algebra(text);
  } catch (const ParseError& e) {
    return {e.kind(), e.line(), e.column()};
  } catch (const Error& e) {
    return {e.kind(), 0, 0};
  }
  ADD_FAILURE() << "parsed: " << text;
  return {ErrorKind::InvalidInput, 0, 0};
}

void expect_same(const Algebra& a, const Algebra& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.basis()->name(i), b.basis()->name(i));
    EXPECT_EQ(a.dgen(i).to_string(), b.dgen(i).to_string());
  }
  ASSERT_EQ(a.metric().size(), b.metric().size());
  for (std::size_t i = 0; i < a.metric().size(); ++i) EXPECT_EQ(a.metric()[i].to_string(), b.metric()[i].to_string());
}

}  // namespace

TEST(ParseForm, Examples) {
  const Acfm a = Acfm::rational(1, 1, 1);
  const auto& b = a.algebra().basis();
  EXPECT_EQ(parse_form("2*alpha^eta + beta^gamma", b),
            scale(Scalar(2), wedge(a.alpha(), a.eta())) + wedge(a.beta(), a.gamma()));
  EXPECT_EQ(parse_form("-1/2 eta^alpha", b), scale(Scalar(Rational(1, 2)), wedge(a.alpha(), a.eta())));
  EXPECT_EQ(parse_form("alpha^alpha", b), Form(b, 2));
  EXPECT_TRUE(parse_form("0", b).is_zero());
  EXPECT_TRUE(parse_form("0", b, 3).is_zero());
  EXPECT_EQ(parse_form("3/4", b), Form::constant(b, Scalar(Rational(3, 4))));
  EXPECT_EQ(parse_form("2 alpha^eta - 1 beta^gamma", b).to_string(), "2 alpha^eta - 1 beta^gamma");
}

TEST(ParseForm, ParamCoefficients) {
  const Acfm a = Acfm::symbolic();
  const ScalarMode& m = a.mode();
  const Form f = parse_form("(t1) alpha^eta + t2*beta^gamma", a.algebra().basis());
  EXPECT_EQ(f, scale(m.symbol("t1"), wedge(a.alpha(), a.eta())) + scale(m.symbol("t2"), wedge(a.beta(), a.gamma())));
  EXPECT_EQ(f.to_string(), "(t1) alpha^eta + (t2) beta^gamma");
}

TEST(ParseForm, Errors) {
  const Acfm a = Acfm::rational(1, 1, 1);
  const auto& b = a.algebra().basis();
  auto kind = [&](const char* text, std::optional<int> degree = {}) {
    try {
      (void)parse_form(text, b, degree);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  EXPECT_EQ(kind("alpha + alpha^beta"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("alpha", 2), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kind("alpha^"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("2 ** alpha"), ErrorKind::SyntaxError);
  EXPECT_EQ(kind("omega^alpha"), ErrorKind::UndeclaredParameter);
  EXPECT_EQ(kind("1/0 alpha"), ErrorKind::DivisionByZero);
}

TEST(ParseAlgebra, DataFiles) {
  const Algebra acfm = load_algebra(data("acfm.alg"));
  expect_same(acfm, Acfm::rational(1, 1, 1).algebra());
  EXPECT_TRUE(acfm.is_sound());
  const Algebra params = load_algebra(data("acfm_params.alg"));
  EXPECT_FALSE(params.mode().is_rational());
  EXPECT_TRUE(params.is_sound());
  EXPECT_FALSE(load_algebra(data("nonjacobi.alg")).is_sound());
  EXPECT_TRUE(load_algebra(data("torus4.alg")).is_sound());
  try {
    (void)load_algebra(data("undeclared.alg"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 12u);
  }
  try {
    (void)load_algebra(data("missing.alg"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(ParseAlgebra, CommentsBlankLinesAndCarriageReturns) {
  const Algebra a = parse_algebra("# header\r\n\r\ngenerators x y z  # three\r\nd x = 0\r\nd y = 0\r\nd z = x^y\r\n");
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a.dgen(2).to_string(), "1 x^y");
  EXPECT_TRUE(a.is_sound());
}

TEST(ParseAlgebra, Metric) {
  const Algebra a = parse_algebra("generators x y\nd x = 0\nd y = 0\nmetric diag 4 1/9\n");
  ASSERT_EQ(a.metric().size(), 2u);
  EXPECT_EQ(a.metric()[0], Scalar(4));
  EXPECT_EQ(a.metric()[1], Scalar(Rational(1, 9)));
  EXPECT_FALSE(a.has_identity_metric());
}

TEST(ParseAlgebra, ErrorsCarryLocation) {
  const auto unknown = algebra_failure("generators x y\nd x = 0\nd w = 0\n");
  EXPECT_EQ(unknown.kind, ErrorKind::SyntaxError);
  EXPECT_EQ(unknown.line, 3u);
  EXPECT_EQ(unknown.column, 3u);
  const auto keyword = algebra_failure("generators x\nfoo x\n");
  EXPECT_EQ(keyword.line, 2u);
  EXPECT_EQ(keyword.column, 1u);
  const auto degree = algebra_failure("generators x y\nd x = x\nd y = 0\n");
  EXPECT_EQ(degree.line, 2u);
  EXPECT_EQ(degree.column, 7u);
  EXPECT_EQ(algebra_failure("generators x y\nd x = 0\nd x = 0\n").line, 3u);
  EXPECT_EQ(algebra_failure("generators x y\nd x = 0\n").kind, ErrorKind::SyntaxError);
  EXPECT_EQ(algebra_failure("d x = 0\n").line, 1u);
  EXPECT_EQ(algebra_failure("generators x x\n").kind, ErrorKind::SyntaxError);
  EXPECT_EQ(algebra_failure("generators x y\nd x = 0\nd y = 0\nmetric diag 1 -1\n").line, 4u);
  EXPECT_EQ(algebra_failure("generators x y\nd x = 0\nd y = 0\nmetric diag 1\n").line, 4u);
  EXPECT_EQ(algebra_failure("generators x\nparams a\n").line, 2u);
  EXPECT_EQ(algebra_failure("").kind, ErrorKind::SyntaxError);
}

TEST(FormatAlgebra, RoundTrip) {
  expect_same(parse_algebra(format_algebra(Acfm::rational(2, Rational(1, 2), 3).algebra())),
              Acfm::rational(2, Rational(1, 2), 3).algebra());
  const Algebra params = load_algebra(data("acfm_params.alg"));
  expect_same(parse_algebra(format_algebra(params)), params);
  const Algebra metric = parse_algebra("generators x y\nd x = 0\nd y = 0\nmetric diag 4 1/9\n");
  expect_same(parse_algebra(format_algebra(metric)), metric);
  support::Rng rng(61);
  const auto sources = support::sound_sources();
  for (int trial = 0; trial < 30; ++trial) {
    Algebra a = support::change_basis(sources[rng.index(sources.size())], rng);
    if (rng.coin()) a = support::perturb(a, rng);
    const std::string text = format_algebra(a);
    expect_same(parse_algebra(text), a);
    EXPECT_EQ(format_algebra(parse_algebra(text)), text);
  }
}
