#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lich/algebra.hpp"
#include "lich/expr_parser.hpp"

namespace lich {

// Form expressions:
//   form  := ['+'|'-'] fterm (('+'|'-') fterm)*
//   fterm := [product ['*']] gen ('^' gen)*  |  product
// where product is the scalar `term` rule and gen a generator name. A
// product without generators is a degree-0 term; a zero constant is allowed
// in any degree, so "0" parses as the zero form.
Form parse_form(TokenCursor& cursor, const BasisPtr& basis);
// Whole-line variant. With `degree` set, a nonzero result of another degree
// throws DegreeMismatch.
Form parse_form(std::string_view text, const BasisPtr& basis, std::optional<int> degree = {});

// Line-oriented algebra description:
//   params k lambda            (optional, first)
//   generators alpha beta ...
//   d alpha = -k alpha^gamma   (one per generator)
//   metric diag 1 1 1 1        (optional)
// '#' starts a comment. Errors carry the line and column; an undeclared
// parameter is reported as a SyntaxError.
Algebra parse_algebra(std::string_view text);
Algebra load_algebra(const std::string& path);

// Canonical text of the same format; parse_algebra(format_algebra(a))
// reproduces a.
std::string format_algebra(const Algebra& alg);

}  // namespace lich
