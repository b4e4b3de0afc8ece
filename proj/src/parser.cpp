#include "odeq/parser.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace odeq {

namespace {

using ExprPtr = std::shared_ptr<const Expr>;

[[noreturn]] void syntax_error(size_t pos, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "position " + std::to_string(pos) + ": " + msg);
}

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& opts) : text_(text), opts_(opts) {}

  Expr run() {
    skip_ws();
    if (at_end()) syntax_error(column(), "empty expression");
    ExprPtr e = expr();
    skip_ws();
    if (!at_end()) {
      if (starts_base()) syntax_error(column(), "implicit multiplication is not allowed");
      syntax_error(column(), std::string("unexpected '") + text_[i_] + "'");
    }
    return *e;
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  size_t column() const { return i_ + 1; }
  char peek() const { return at_end() ? '\0' : text_[i_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  bool starts_base() {
    skip_ws();
    char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  static ExprPtr node(Expr::Kind k, size_t pos, std::vector<ExprPtr> kids) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->pos = pos;
    e->kids = std::move(kids);
    return e;
  }

  ExprPtr expr() {
    skip_ws();
    size_t pos = column();
    ExprPtr lhs;
    if (accept('-')) {
      lhs = node(Expr::Kind::Neg, pos, {term()});
    } else {
      accept('+');
      lhs = term();
    }
    for (;;) {
      skip_ws();
      pos = column();
      if (accept('+')) {
        lhs = node(Expr::Kind::Add, pos, {lhs, term()});
      } else if (accept('-')) {
        lhs = node(Expr::Kind::Sub, pos, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      skip_ws();
      size_t pos = column();
      if (accept('*')) {
        lhs = node(Expr::Kind::Mul, pos, {lhs, factor()});
      } else if (peek() == '/') {
        if (!opts_.allow_division) syntax_error(pos, "division is only allowed inside rational literals");
        ++i_;
        lhs = node(Expr::Kind::Div, pos, {lhs, factor()});
      } else {
        if (starts_base()) syntax_error(column(), "implicit multiplication is not allowed");
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    ExprPtr b = base();
    skip_ws();
    size_t pos = column();
    if (accept('^')) {
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        syntax_error(column(), "expected a natural number exponent");
      Int e = digits();
      if (e > Int(static_cast<long>(max_degree())))
        throw Error(ErrorKind::ResourceLimit, "exponent " + e.get_str() + " exceeds ODEQ_MAX_DEGREE");
      auto n = std::make_shared<Expr>();
      n->kind = Expr::Kind::Pow;
      n->pos = pos;
      n->exponent = static_cast<unsigned>(e.get_ui());
      n->kids = {b};
      skip_ws();
      if (peek() == '^') syntax_error(column(), "chained exponents are not allowed");
      return n;
    }
    return b;
  }

  Int digits() {
    size_t start = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
    return Int(std::string(text_.substr(start, i_ - start)));
  }

  ExprPtr base() {
    skip_ws();
    size_t pos = column();
    if (at_end()) syntax_error(pos, "unexpected end of input");
    char c = peek();
    if (c == '(') {
      ++i_;
      ExprPtr e = expr();
      if (!accept(')')) syntax_error(column(), "expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = digits();
      Int d = 1;
      // A literal p/q binds tighter than any operator.
      size_t save = i_;
      skip_ws();
      if (peek() == '/') {
        size_t slash = i_;
        ++i_;
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          d = digits();
          if (d == 0) syntax_error(slash + 2, "zero denominator");
        } else if (opts_.allow_division) {
          i_ = save;
        } else {
          syntax_error(slash + 1, "expected a positive integer after '/'");
        }
      } else {
        i_ = save;
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->pos = pos;
      e->value = Rat(n, d);
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++i_;
      std::string name(1, c);
      if (peek() == '\'') {
        name += '\'';
        ++i_;
      } else if (text_.substr(i_, 3) == "\xe2\x80\xb2") {
        name += '\'';
        i_ += 3;
      }
      std::string canon = name;
      if (name == "y'") canon = "S";
      if (name == "y") canon = "T";
      const auto& vars = opts_.variables;
      if (std::find(vars.begin(), vars.end(), canon) == vars.end())
        syntax_error(pos, "unknown variable '" + name + "'");
      if (!at_end() && std::isalnum(static_cast<unsigned char>(peek())))
        syntax_error(column(), "implicit multiplication is not allowed");
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Variable;
      e->pos = pos;
      e->name = canon;
      return e;
    }
    syntax_error(pos, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const ParseOptions& opts_;
  size_t i_ = 0;
};

template <class R>
R evaluate(const Expr& e, const std::function<R(const std::string&)>& var) {
  switch (e.kind) {
    case Expr::Kind::Number: return R(RatFunc(e.value));
    case Expr::Kind::Variable: return var(e.name);
    case Expr::Kind::Add: return evaluate<R>(*e.kids[0], var) + evaluate<R>(*e.kids[1], var);
    case Expr::Kind::Sub: return evaluate<R>(*e.kids[0], var) - evaluate<R>(*e.kids[1], var);
    case Expr::Kind::Mul: return evaluate<R>(*e.kids[0], var) * evaluate<R>(*e.kids[1], var);
    case Expr::Kind::Neg: return -evaluate<R>(*e.kids[0], var);
    case Expr::Kind::Pow: return evaluate<R>(*e.kids[0], var).pow(e.exponent);
    case Expr::Kind::Div:
      if constexpr (requires(R a, R b) { a / b; }) {
        R d = evaluate<R>(*e.kids[1], var);
        if (is_zero(d)) syntax_error(e.pos, "division by zero");
        return evaluate<R>(*e.kids[0], var) / d;
      } else {
        syntax_error(e.pos, "division is not supported here");
      }
  }
  syntax_error(e.pos, "bad expression");
}

}  // namespace

Expr parse_expression(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).run();
}

std::string strip_comments(std::string_view text) {
  std::string out;
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    if (!comment) out += c;
  }
  return out;
}

BiPoly parse_bipoly(std::string_view text) {
  Expr e = parse_expression(text, ParseOptions{});
  std::function<BiPoly(const std::string&)> var = [](const std::string& n) {
    if (n == "S") return BiPoly::S();
    if (n == "T") return BiPoly::T();
    return BiPoly::z();
  };
  return evaluate<BiPoly>(e, var);
}

RatFunc parse_ratfunc(std::string_view text, const std::string& var) {
  ParseOptions opts;
  opts.variables = {var};
  opts.allow_division = true;
  Expr e = parse_expression(text, opts);
  std::function<RatFunc(const std::string&)> lookup = [](const std::string&) {
    return RatFunc::var();
  };
  return evaluate<RatFunc>(e, lookup);
}

}  // namespace odeq
