#pragma once

// The coefficient tower: Q[z], Q(z), and Q(z)(v).

#include <optional>
#include <string>

#include "odeq/fraction.hpp"

namespace odeq {

using UPoly = Poly<Rat>;
using RatFunc = Fraction<Rat>;        // Q(z)
using RFPoly = Poly<RatFunc>;         // Q(z)[v]
using BiRat = Fraction<RatFunc>;      // Q(z)(v)

// d/dz on Q(z) is differentiation in its own variable.
inline RatFunc d_dz(const RatFunc& f) { return f.derivative(); }
inline RFPoly d_dz(const RFPoly& p) { return coeff_derivative(p); }
inline BiRat d_dz(const BiRat& f) { return coeff_derivative(f); }

inline bool is_constant(const RatFunc& f) { return f.is_constant(); }

inline bool is_z_free(const RFPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_constant()) return false;
  return true;
}
inline bool is_z_free(const BiRat& f) { return is_z_free(f.num()) && is_z_free(f.den()); }

inline RatFunc z_var() { return RatFunc::var(); }

// Drop z from a z-free polynomial over Q(z).
inline UPoly to_rational_poly(const RFPoly& p) {
  return p.map_coeffs([](const RatFunc& c) {
    if (!c.is_constant()) throw std::domain_error("to_rational_poly: coefficient depends on z");
    return c.constant_value();
  });
}
inline RatFunc to_rational(const BiRat& f) {
  return RatFunc(to_rational_poly(f.num()), to_rational_poly(f.den()));
}
inline RFPoly embed(const UPoly& p) {
  return p.map_coeffs([](const Rat& c) { return RatFunc(c); });
}
inline BiRat embed(const RatFunc& f) { return BiRat(embed(f.num()), embed(f.den())); }

inline std::string str(const Rat& r) { return r.str(); }
inline std::string str(const UPoly& p, const std::string& var = "z") { return to_string(p, {var}); }
inline std::string str(const RatFunc& f, const std::string& var = "z") { return to_string(f, {var}); }
inline std::string str(const RFPoly& p, const std::string& var) { return to_string(p, {var, "z"}); }
inline std::string str(const BiRat& f, const std::string& var) { return to_string(f, {var, "z"}); }

// Lowest-order data of a rational function at a finite point a:
// f = lead * (z - a)^order + higher terms.
struct LocalLead {
  int order = 0;
  Rat lead;
};

inline std::pair<int, Rat> lowest_term(const UPoly& p) {
  int v = p.valuation();
  return {v, p.coeff(v)};
}

inline LocalLead local_lead(const RatFunc& f, const Rat& a) {
  if (f.is_zero()) throw std::domain_error("local_lead of zero");
  UPoly shift = UPoly(std::vector<Rat>{a, Rat(1)});
  auto [vn, ln] = lowest_term(f.num().compose(shift));
  auto [vd, ld] = lowest_term(f.den().compose(shift));
  return {vn - vd, ln / ld};
}

// Same data in the chart w = 1/z at z = infinity.
inline LocalLead local_lead_at_infinity(const RatFunc& f) {
  if (f.is_zero()) throw std::domain_error("local_lead of zero");
  return {f.order_at_infinity(), f.num().lc() / f.den().lc()};
}

// Monic gcd in Q(z)[v], computed by a primitive remainder sequence over
// Q[z][v]; preferred over the generic Euclidean gcd by overload resolution.
RFPoly gcd(const RFPoly& a, const RFPoly& b);

// Exact square root in Q(z), if one exists.
std::optional<RatFunc> exact_sqrt(const RatFunc& f);
std::optional<UPoly> exact_sqrt(const UPoly& p);

}  // namespace odeq
