#pragma once

// Validated first-order equations f(y', y, z) = 0 and the differential
// function field Q(z)(t)[s]/(f) with t' = s, z' = 1.

#include <optional>
#include <string>
#include <string_view>

#include "odeq/bipoly.hpp"

namespace odeq {

class DiffEq {
 public:
  // Validates f and stores its normalized form. Throws Error with kind
  // DegenerateEquation, NotSquarefree or ProbablyReducible.
  static DiffEq from_bipoly(const BiPoly& f);

  const BiPoly& f() const { return f_; }
  const BiPoly& separant() const { return separant_; }
  int deg_S() const { return f_.deg_S(); }
  int deg_T() const { return f_.deg_T(); }
  bool is_autonomous() const { return f_.is_z_free(); }
  std::string str() const { return f_.str(); }

  friend bool operator==(const DiffEq& a, const DiffEq& b) { return a.f_ == b.f_; }

 private:
  explicit DiffEq(BiPoly f);
  BiPoly f_;
  BiPoly separant_;
};

// Parses the equation grammar ('#' comments allowed) and validates.
DiffEq parse_equation(std::string_view text);

// Q(z)(t)[s]/(f), elements as polynomials in s of degree < deg_S f.
class FunctionField {
 public:
  using Elem = Poly<BiRat>;

  explicit FunctionField(const BiPoly& f);

  int degree() const { return modulus_.degree(); }
  const Poly<BiRat>& modulus() const { return modulus_; }
  Elem reduce(const Poly<BiRat>& p) const { return divmod(p, modulus_).second; }
  Elem from(const BiPoly& p) const { return reduce(p.over_T_field()); }
  Elem s() const { return reduce(Elem::var()); }
  Elem t() const { return Elem(BiRat::var()); }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  std::optional<Elem> inverse(const Elem& a) const;
  std::string str(const Elem& e) const { return to_string(e, {"s", "t", "z"}); }

 private:
  Poly<BiRat> modulus_;  // monic in s
};

// t' = s and s' = numerator / denominator with numerator = -(s f_T + f_z)
// and denominator = f_S.
struct Derivation {
  BiPoly numerator;
  BiPoly denominator;
};

Derivation induced_derivation(const DiffEq& eq);

class DifferentialField {
 public:
  using Elem = FunctionField::Elem;

  explicit DifferentialField(const DiffEq& eq);

  const FunctionField& field() const { return field_; }
  const Elem& s_prime() const { return s_prime_; }

  // D of an element of the field.
  Elem apply(const Elem& e) const;
  // D(num / den); throws NonInvertibleDenominator if den vanishes mod f.
  Elem apply(const BiPoly& num, const BiPoly& den = BiPoly(1)) const;
  Elem element(const BiPoly& num, const BiPoly& den = BiPoly(1)) const;

 private:
  FunctionField field_;
  Elem s_prime_;
};

}  // namespace odeq
