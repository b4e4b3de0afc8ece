#pragma once

// Expression parser for equations and rational-function literals.
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*          ('/' between factors only when
//                                             division is enabled)
//   factor   := base ('^' natural)?
//   base     := variable | rational | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//
// Whitespace is insignificant; implicit multiplication is rejected. The
// leading sign of an expression is an extension of the equation grammar.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "odeq/bipoly.hpp"

namespace odeq {

struct Expr {
  enum class Kind { Number, Variable, Add, Sub, Mul, Div, Pow, Neg };
  Kind kind = Kind::Number;
  Rat value;
  std::string name;  // canonical variable name
  unsigned exponent = 0;
  size_t pos = 0;  // 1-based column of the node in the input
  std::vector<std::shared_ptr<const Expr>> kids;
};

struct ParseOptions {
  // Variables recognised; "S" also accepts y' and "T" accepts y.
  std::vector<std::string> variables{"S", "T", "z"};
  bool allow_division = false;
};

Expr parse_expression(std::string_view text, const ParseOptions& opts = {});

// Drops '#' comments (to end of line).
std::string strip_comments(std::string_view text);

// Equation polynomial in S (y'), T (y) and z; division only in literals.
BiPoly parse_bipoly(std::string_view text);

// Rational function in one variable (default z); division allowed.
RatFunc parse_ratfunc(std::string_view text, const std::string& var = "z");

}  // namespace odeq
