#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lich/scalar.hpp"

namespace lich {

enum class TokenKind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t column;  // 1-based
};

// Splits one line of input. Identifiers are [A-Za-z_][A-Za-z0-9_]*.
std::vector<Token> tokenize(std::string_view text, std::size_t line = 0);

class TokenCursor {
 public:
  TokenCursor(std::vector<Token> tokens, std::size_t line)
      : tokens_(std::move(tokens)), line_(line) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool accept(TokenKind kind);
  const Token& expect(TokenKind kind, std::string_view what);
  bool at_end() const { return peek().kind == TokenKind::End; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& tok, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

// Recursive-descent scalar parser. `is_stop` marks identifiers that end a
// product (generator names, when parsing form coefficients).
class ScalarExprParser {
 public:
  using StopPredicate = std::function<bool(std::string_view)>;

  ScalarExprParser(TokenCursor& cursor, ScalarMode mode, StopPredicate is_stop = {})
      : cur_(cursor), mode_(std::move(mode)), is_stop_(std::move(is_stop)) {}

  Scalar expr();
  // Product of factors; returns nullopt-like `one` when the next token
  // already starts a stop identifier and `allow_empty` is set.
  std::optional<Scalar> product(bool allow_empty);
  bool starts_stop() const;

 private:
  Scalar power();
  Scalar factor();

  TokenCursor& cur_;
  ScalarMode mode_;
  StopPredicate is_stop_;
};

}  // namespace lich
