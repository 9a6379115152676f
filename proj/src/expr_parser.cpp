#include "lich/expr_parser.hpp"

#include <cctype>

#include "lich/error.hpp"

namespace lich {

std::vector<Token> tokenize(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({TokenKind::Integer, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({TokenKind::Ident, std::string(text.substr(i, j - i)), col});
      i = j;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '=': kind = TokenKind::Equals; break;
      default:
        throw ParseError(ErrorKind::SyntaxError,
                         std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({TokenKind::End, "end of input", text.size() + 1});
  return out;
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  const std::size_t at = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[at];
}

const Token& TokenCursor::next() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenCursor::accept(TokenKind kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

const Token& TokenCursor::expect(TokenKind kind, std::string_view what) {
  if (peek().kind != kind)
    fail_at(peek(), "expected " + std::string(what) + ", found '" + peek().text + "'");
  return next();
}

void TokenCursor::fail(const std::string& message) const { fail_at(peek(), message); }

void TokenCursor::fail_at(const Token& tok, const std::string& message) const {
  throw ParseError(ErrorKind::SyntaxError, message, line_, tok.column);
}

Scalar ScalarExprParser::expr() {
  bool negate = false;
  if (cur_.accept(TokenKind::Minus)) negate = true;
  else cur_.accept(TokenKind::Plus);
  Scalar acc = *product(false);
  if (negate) acc = -acc;
  while (true) {
    if (cur_.accept(TokenKind::Plus)) acc = acc + *product(false);
    else if (cur_.accept(TokenKind::Minus)) acc = acc - *product(false);
    else break;
  }
  return acc;
}

bool ScalarExprParser::starts_stop() const {
  const Token& t = cur_.peek();
  return t.kind == TokenKind::Ident && is_stop_ && is_stop_(t.text);
}

std::optional<Scalar> ScalarExprParser::product(bool allow_empty) {
  if (starts_stop()) {
    if (allow_empty) return std::nullopt;
    cur_.fail("expected a scalar, found generator '" + cur_.peek().text + "'");
  }
  Scalar acc = power();
  while (true) {
    const TokenKind k = cur_.peek().kind;
    if (k != TokenKind::Star && k != TokenKind::Slash) break;
    // "2*alpha": the '*' belongs to the form term, not the scalar.
    const Token& after = cur_.peek(1);
    if (after.kind == TokenKind::Ident && is_stop_ && is_stop_(after.text)) break;
    const Token& op = cur_.next();
    Scalar rhs = power();
    if (k == TokenKind::Star) {
      acc = acc * rhs;
    } else {
      if (rhs.is_zero()) throw ParseError(ErrorKind::DivisionByZero, "division by zero", cur_.line(), op.column);
      acc = acc / rhs;
    }
  }
  return acc;
}

Scalar ScalarExprParser::power() {
  Scalar base = factor();
  if (cur_.peek().kind == TokenKind::Caret && cur_.peek(1).kind == TokenKind::Integer) {
    cur_.next();
    const Token& e = cur_.next();
    if (e.text.size() > 6) cur_.fail_at(e, "exponent too large");
    base = base.pow(static_cast<std::uint32_t>(std::stoul(e.text)));
  }
  return base;
}

Scalar ScalarExprParser::factor() {
  const Token& t = cur_.peek();
  switch (t.kind) {
    case TokenKind::Integer: {
      cur_.next();
      return mode_.constant(Rational(mpq_class(mpz_class(t.text, 10))));
    }
    case TokenKind::Ident: {
      if (!mode_.symbol_index(t.text))
        throw ParseError(ErrorKind::UndeclaredParameter,
                         "undeclared parameter '" + t.text + "'", cur_.line(), t.column);
      cur_.next();
      return mode_.symbol(t.text);
    }
    case TokenKind::LParen: {
      cur_.next();
      // Parenthesised sub-expressions never contain generators.
      ScalarExprParser inner(cur_, mode_);
      Scalar v = inner.expr();
      cur_.expect(TokenKind::RParen, "')'");
      return v;
    }
    default:
      cur_.fail_at(t, "expected a number, parameter or '(', found '" + t.text + "'");
  }
}

}  // namespace lich
