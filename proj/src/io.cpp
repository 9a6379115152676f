#include "lich/io.hpp"

#include <fstream>
#include <sstream>

#include "lich/error.hpp"

namespace lich {

namespace {

bool is_generator(const BasisPtr& basis, std::string_view name) {
  return basis->index_of(name).has_value();
}

Form parse_monomial(TokenCursor& cur, const BasisPtr& basis) {
  auto gen = [&]() {
    const Token& t = cur.peek();
    if (t.kind != TokenKind::Ident || !is_generator(basis, t.text))
      cur.fail_at(t, "expected a generator, found '" + t.text + "'");
    cur.next();
    return Form::generator(basis, *basis->index_of(t.text));
  };
  Form m = gen();
  while (cur.accept(TokenKind::Caret)) m = wedge(m, gen());
  return m;
}

Form parse_term(TokenCursor& cur, const BasisPtr& basis) {
  ScalarExprParser scalar(cur, basis->mode(), [&](std::string_view s) { return is_generator(basis, s); });
  std::optional<Scalar> coeff = scalar.product(true);
  if (coeff && cur.peek().kind == TokenKind::Star) cur.next();
  if (!scalar.starts_stop()) {
    if (!coeff) cur.fail("expected a term");
    const Token& t = cur.peek();
    if (t.kind == TokenKind::Star) cur.fail_at(t, "expected a generator after '*'");
    return Form::constant(basis, *coeff);
  }
  Form m = parse_monomial(cur, basis);
  return coeff ? scale(*coeff, m) : m;
}

ParseError as_syntax(const ParseError& e) {
  if (e.kind() != ErrorKind::UndeclaredParameter) return e;
  return ParseError(ErrorKind::SyntaxError, e.detail(), e.line(), e.column());
}

std::string strip_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return std::string(line);
}

std::vector<std::string> ident_list(TokenCursor& cur, const char* what) {
  std::vector<std::string> names;
  while (!cur.at_end()) names.push_back(cur.expect(TokenKind::Ident, what).text);
  if (names.empty()) cur.fail(std::string("expected at least one ") + what);
  return names;
}

}  // namespace

Form parse_form(TokenCursor& cur, const BasisPtr& basis) {
  Form acc(basis, 0);
  std::optional<int> degree;
  bool first = true;
  while (true) {
    bool negate = false;
    if (first) {
      negate = cur.accept(TokenKind::Minus);
      if (!negate) cur.accept(TokenKind::Plus);
    } else if (cur.accept(TokenKind::Minus)) {
      negate = true;
    } else if (!cur.accept(TokenKind::Plus)) {
      break;
    }
    first = false;
    const Token& start = cur.peek();
    const std::size_t column = start.column;
    Form term = parse_term(cur, basis);
    if (term.is_zero()) continue;
    if (degree && *degree != term.degree())
      throw ParseError(ErrorKind::SyntaxError,
                       "term of degree " + std::to_string(term.degree()) + " in a form of degree " +
                           std::to_string(*degree),
                       cur.line(), column);
    degree = term.degree();
    acc = negate ? acc - term : acc + term;
  }
  return acc;
}

Form parse_form(std::string_view text, const BasisPtr& basis, std::optional<int> degree) {
  TokenCursor cur(tokenize(text), 0);
  Form f = parse_form(cur, basis);
  if (!cur.at_end()) {
    const Token& t = cur.peek();
    if (t.kind == TokenKind::Ident) cur.fail_at(t, "unknown generator or parameter '" + t.text + "'");
    cur.fail_at(t, "unexpected '" + t.text + "'");
  }
  if (degree) {
    if (f.is_zero()) return Form(basis, *degree);
    if (f.degree() != *degree)
      throw Error(ErrorKind::DegreeMismatch, "expected a " + std::to_string(*degree) + "-form, got degree " +
                                                 std::to_string(f.degree()));
  }
  return f;
}

Algebra parse_algebra(std::string_view text) {
  std::optional<ScalarMode> mode;
  BasisPtr basis;
  std::vector<std::optional<Form>> dgen;
  std::vector<Scalar> metric;
  std::size_t line_no = 0;
  std::size_t start = 0;
  try {
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      const std::string line = strip_line(text.substr(start, end - start));
      start = end + 1;
      TokenCursor cur(tokenize(line, line_no), line_no);
      if (cur.at_end()) continue;
      const Token keyword = cur.expect(TokenKind::Ident, "a keyword");
      auto guarded = [&](auto&& fn) {
        try {
          return fn();
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(ErrorKind::SyntaxError, e.what(), line_no, keyword.column);
        }
      };
      if (keyword.text == "params") {
        if (mode || basis) cur.fail_at(keyword, "'params' must appear once, before 'generators'");
        auto names = ident_list(cur, "parameter name");
        mode = guarded([&] { return ScalarMode::params(names); });
      } else if (keyword.text == "generators") {
        if (basis) cur.fail_at(keyword, "duplicate 'generators' line");
        auto names = ident_list(cur, "generator name");
        basis = guarded([&] { return Basis::create(names, mode.value_or(ScalarMode::rational())); });
        dgen.assign(basis->size(), std::nullopt);
      } else if (keyword.text == "d") {
        if (!basis) cur.fail_at(keyword, "'d' before 'generators'");
        const Token& g = cur.expect(TokenKind::Ident, "a generator");
        auto idx = basis->index_of(g.text);
        if (!idx) cur.fail_at(g, "unknown generator '" + g.text + "'");
        if (dgen[*idx]) cur.fail_at(g, "duplicate 'd " + g.text + "' line");
        cur.expect(TokenKind::Equals, "'='");
        const std::size_t rhs_col = cur.peek().column;
        Form f = parse_form(cur, basis);
        if (!cur.at_end()) cur.fail("unexpected '" + cur.peek().text + "'");
        if (!f.is_zero() && f.degree() != 2)
          throw ParseError(ErrorKind::SyntaxError, "d of a generator must be a 2-form", line_no, rhs_col);
        dgen[*idx] = f.is_zero() ? Form(basis, 2) : f;
      } else if (keyword.text == "metric") {
        if (!basis) cur.fail_at(keyword, "'metric' before 'generators'");
        if (!metric.empty()) cur.fail_at(keyword, "duplicate 'metric' line");
        const Token& kind = cur.expect(TokenKind::Ident, "'diag'");
        if (kind.text != "diag") cur.fail_at(kind, "only 'metric diag' is supported");
        ScalarExprParser scalar(cur, basis->mode());
        std::vector<Scalar> values;
        while (!cur.at_end()) {
          const Token& t = cur.peek();
          Scalar v = *scalar.product(false);
          auto c = v.constant_value();
          if (!c || c->sign() <= 0) cur.fail_at(t, "metric entries must be positive constants");
          values.push_back(std::move(v));
        }
        if (values.size() != basis->size())
          cur.fail("expected " + std::to_string(basis->size()) + " metric entries, found " +
                   std::to_string(values.size()));
        metric = std::move(values);
      } else {
        cur.fail_at(keyword, "unknown keyword '" + keyword.text + "'");
      }
    }
  } catch (const ParseError& e) {
    throw as_syntax(e);
  }
  if (!basis) throw Error(ErrorKind::SyntaxError, "missing 'generators' line");
  std::vector<Form> forms;
  for (std::size_t i = 0; i < dgen.size(); ++i) {
    if (!dgen[i]) throw Error(ErrorKind::SyntaxError, "missing 'd " + basis->name(i) + "' line");
    forms.push_back(std::move(*dgen[i]));
  }
  return Algebra(basis, std::move(forms), std::move(metric));
}

Algebra load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

std::string format_algebra(const Algebra& alg) {
  std::string out;
  const ScalarMode& mode = alg.mode();
  if (!mode.is_rational()) {
    out += "params";
    for (const auto& s : mode.symbols()) out += " " + s;
    out += "\n";
  }
  out += "generators";
  for (const auto& n : alg.basis()->names()) out += " " + n;
  out += "\n";
  for (std::size_t i = 0; i < alg.size(); ++i)
    out += "d " + alg.basis()->name(i) + " = " + alg.dgen(i).to_string() + "\n";
  if (!alg.has_identity_metric()) {
    out += "metric diag";
    for (const auto& m : alg.metric()) out += mode.is_rational() ? " " + m.to_string() : " (" + m.to_string() + ")";
    out += "\n";
  }
  return out;
}

}  // namespace lich
