#include "odeq/diffeq.hpp"

#include <vector>

#include "odeq/factor.hpp"
#include "odeq/parser.hpp"

namespace odeq {

namespace {

UPoly specialize(const RFPoly& q, const Rat& z0) {
  return q.map_coeffs([&](const RatFunc& c) {
    auto v = c.eval(z0);
    return v ? *v : Rat(0);
  });
}

// Specialize f at z = z0 and the second variable = value, as a polynomial
// in the first variable of `view`.
UPoly specialize_view(const Poly<RFPoly>& view, const Rat& z0, const Rat& value) {
  std::vector<Rat> out;
  for (const auto& q : view.coeffs()) out.push_back(specialize(q, z0).eval(value));
  return UPoly(std::move(out));
}

// True if some degree-preserving specialization is irreducible over Q.
bool has_irreducible_specialization(const Poly<RFPoly>& view) {
  static const long kZ[] = {2, 3, 5, 7, -2, 11, 13, -3};
  static const long kV[] = {3, -2, 5, 7, 2, -5, 11, 4};
  int valid = 0;
  for (long z0 : kZ) {
    for (long v0 : kV) {
      UPoly u = specialize_view(view, Rat(z0), Rat(v0));
      if (u.degree() != view.degree() || !is_squarefree(u)) continue;
      if (is_irreducible(u)) return true;
      if (++valid >= 6) return false;
    }
  }
  return false;
}

}  // namespace

DiffEq::DiffEq(BiPoly f) : f_(std::move(f)), separant_(f_.d_S()) {}

DiffEq DiffEq::from_bipoly(const BiPoly& input) {
  if (input.is_zero()) throw Error(ErrorKind::DegenerateEquation, "zero polynomial");
  if (input.deg_S() < 1) throw Error(ErrorKind::DegenerateEquation, "no S");
  bool has_t = false;
  for (const auto& [k, c] : input.terms()) has_t = has_t || k.second > 0;
  if (!has_t) throw Error(ErrorKind::DegenerateEquation, "no T");
  BiPoly f = input.normalized();

  const Poly<RFPoly> in_s = f.as_poly_in_S();
  const Poly<RFPoly> in_t = f.as_poly_in_T();
  RFPoly g;
  for (const auto& c : in_s.coeffs()) g = gcd(g, c);
  if (g.degree() > 0)
    throw Error(ErrorKind::DegenerateEquation, "factor without S: " + odeq::str(g, "T"));
  g = RFPoly();
  for (const auto& c : in_t.coeffs()) g = gcd(g, c);
  if (g.degree() > 0)
    throw Error(ErrorKind::DegenerateEquation, "factor without T: " + odeq::str(g, "S"));

  Poly<BiRat> over_t = f.over_T_field();
  if (gcd(over_t, over_t.derivative()).degree() > 0)
    throw Error(ErrorKind::NotSquarefree, "f has a repeated factor");

  if (f.deg_S() > 1 && f.deg_T() > 1) {
    if (!has_irreducible_specialization(in_s) && !has_irreducible_specialization(in_t))
      throw Error(ErrorKind::ProbablyReducible, "every tested specialization factors over Q");
  }
  return DiffEq(std::move(f));
}

DiffEq parse_equation(std::string_view text) {
  return DiffEq::from_bipoly(parse_bipoly(strip_comments(text)));
}

FunctionField::FunctionField(const BiPoly& f) : modulus_(monic(f.over_T_field())) {}

std::optional<FunctionField::Elem> FunctionField::inverse(const Elem& a) const {
  if (a.is_zero()) return std::nullopt;
  auto [g, s, t] = ext_gcd(a, modulus_);
  if (g.degree() != 0) return std::nullopt;
  return reduce(s);
}

Derivation induced_derivation(const DiffEq& eq) {
  const BiPoly& f = eq.f();
  return {-(BiPoly::S() * f.d_T() + f.d_z()), f.d_S()};
}

DifferentialField::DifferentialField(const DiffEq& eq) : field_(eq.f()) {
  Derivation d = induced_derivation(eq);
  auto inv = field_.inverse(field_.from(d.denominator));
  if (!inv) throw Error(ErrorKind::NonInvertibleDenominator, "separant vanishes modulo f");
  s_prime_ = field_.mul(field_.from(d.numerator), *inv);
}

DifferentialField::Elem DifferentialField::apply(const Elem& e) const {
  // D(sum c_k s^k) = sum (dc_k/dz + s dc_k/dt) s^k + k c_k s^(k-1) s'.
  const Elem s = field_.s();
  Elem out;
  Elem s_pow(BiRat(1));
  for (int k = 0; k <= e.degree(); ++k) {
    const BiRat& c = e.coeffs()[k];
    if (!c.is_zero()) {
      Elem term = Elem(d_dz(c)) + field_.mul(Elem(c.derivative()), s);
      out = out + field_.mul(term, s_pow);
      if (k > 0) {
        Elem s_km1 = field_.reduce(Elem::monomial(c * BiRat(RatFunc(k)), k - 1));
        out = out + field_.mul(s_km1, s_prime_);
      }
    }
    s_pow = field_.mul(s_pow, s);
  }
  return field_.reduce(out);
}

DifferentialField::Elem DifferentialField::element(const BiPoly& num, const BiPoly& den) const {
  auto inv = field_.inverse(field_.from(den));
  if (!inv) throw Error(ErrorKind::NonInvertibleDenominator, "denominator vanishes modulo f");
  return field_.mul(field_.from(num), *inv);
}

DifferentialField::Elem DifferentialField::apply(const BiPoly& num, const BiPoly& den) const {
  return apply(element(num, den));
}

}  // namespace odeq
