#pragma once

// Rational-function integration: Hermite reduction and the
// Rothstein-Trager residue test.

#include <stdexcept>

#include "odeq/fraction.hpp"
#include "odeq/resultant.hpp"

namespace odeq {

template <class F>
struct HermiteResult {
  Fraction<F> rational_part;
  Fraction<F> remainder;  // proper, squarefree denominator
};

template <class F>
Poly<F> integrate_polynomial(const Poly<F>& p) {
  if (p.is_zero()) return p;
  std::vector<F> c(p.coeffs().size() + 1, F(0));
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    c[i + 1] = p.coeffs()[i] / F(static_cast<long>(i + 1));
  return Poly<F>(std::move(c));
}

// r = d/dv(rational_part) + remainder.
template <class F>
HermiteResult<F> hermite_reduce(const Fraction<F>& r) {
  auto [poly, a] = divmod(r.num(), r.den());
  Fraction<F> g(integrate_polynomial(poly));
  const Poly<F> d = r.den();
  if (a.is_zero()) return {g, Fraction<F>()};
  Poly<F> dm = gcd(d, d.derivative());
  const Poly<F> ds = divmod(d, dm).first;
  while (dm.degree() > 0) {
    Poly<F> dm2 = gcd(dm, dm.derivative());
    Poly<F> dms = divmod(dm, dm2).first;
    Poly<F> lhs = -divmod(ds * dm.derivative(), dm).first;
    auto [b, c] = solve_diophantine(lhs, dms, a);
    a = c - b.derivative() * divmod(ds, dms).first;
    g = g + Fraction<F>(b, dm);
    dm = dm2;
  }
  return {g, Fraction<F>(a, ds)};
}

// R(c) = Res_v(D, A - c D') for a proper remainder A/D; its roots are the
// residues.
template <class F>
Poly<F> rothstein_trager(const Fraction<F>& rem) {
  if (rem.is_zero()) return Poly<F>(F(1));
  const Poly<F>& a = rem.num();
  const Poly<F>& d = rem.den();
  if (a.degree() >= d.degree()) throw std::invalid_argument("rothstein_trager: improper input");
  const Poly<F> dd = d.derivative();
  using PF = Poly<F>;
  std::vector<PF> dc, bc;
  for (int i = 0; i <= d.degree(); ++i) dc.push_back(PF(d.coeff(i)));
  for (int i = 0; i <= std::max(a.degree(), dd.degree()); ++i)
    bc.push_back(PF(std::vector<F>{a.coeff(i), -dd.coeff(i)}));
  return resultant_domain(Poly<PF>(dc), Poly<PF>(bc));
}

// True iff the remainder has a rational antiderivative, i.e. every
// residue vanishes.
template <class F>
bool residues_all_zero(const Fraction<F>& rem) {
  if (rem.is_zero()) return true;
  Poly<F> r = rothstein_trager(rem);
  return r.valuation() == r.degree();
}

}  // namespace odeq
