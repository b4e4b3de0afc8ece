#include "odeq/ratfunc.hpp"

#include "odeq/factor.hpp"

namespace odeq {

namespace {

using ZPoly = Poly<UPoly>;  // Q[z][v]

ZPoly cleared(const RFPoly& p) {
  UPoly l(Rat(1));
  for (const auto& c : p.coeffs()) l = divmod(l * c.den(), gcd(l, c.den())).first;
  std::vector<UPoly> out;
  for (const auto& c : p.coeffs()) out.push_back(divmod(c.num() * l, c.den()).first);
  return ZPoly(std::move(out));
}

// Divides out the content in Q[z] and the rational content.
ZPoly primitive(const ZPoly& p) {
  UPoly g;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  Int num = 0, den = 1;
  std::vector<UPoly> out;
  for (const auto& c : p.coeffs()) {
    UPoly q = g.degree() > 0 ? divmod(c, g).first : c;
    if (!q.is_zero()) {
      Rat content = rational_content(q);
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), content.num().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), content.den().get_mpz_t());
    }
    out.push_back(std::move(q));
  }
  const Rat scale(den, num);
  for (auto& c : out) c = c.scaled(scale);
  return ZPoly(std::move(out));
}

ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const int db = b.degree();
  const UPoly& lb = b.lc();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const UPoly la = a.lc();
    std::vector<UPoly> next(static_cast<size_t>(a.degree()), UPoly());
    for (int k = 0; k < a.degree(); ++k) {
      UPoly v = a.coeff(k) * lb;
      if (k >= shift) v = v - la * b.coeff(k - shift);
      next[k] = std::move(v);
    }
    a = ZPoly(std::move(next));
  }
  return a;
}

}  // namespace

RFPoly gcd(const RFPoly& a, const RFPoly& b) {
  if (a.is_zero()) return b.is_zero() ? RFPoly() : monic(b);
  if (b.is_zero()) return monic(a);
  ZPoly A = primitive(cleared(a)), B = primitive(cleared(b));
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    if (B.degree() == 0) return RFPoly(RatFunc(1));
    ZPoly R = pseudo_remainder(std::move(A), B);
    A = std::move(B);
    B = R.is_zero() ? R : primitive(R);
  }
  return monic(A.map_coeffs([](const UPoly& c) { return RatFunc(c); }));
}

std::optional<UPoly> exact_sqrt(const UPoly& p) {
  if (p.is_zero()) return p;
  auto c = exact_sqrt(p.lc());
  if (!c) return std::nullopt;
  UPoly root(*c);
  for (const auto& sq : squarefree_decomposition(p)) {
    if (sq.multiplicity % 2 != 0) return std::nullopt;
    root = root * sq.factor.pow(static_cast<unsigned>(sq.multiplicity / 2));
  }
  return root;
}

std::optional<RatFunc> exact_sqrt(const RatFunc& f) {
  auto n = exact_sqrt(f.num());
  if (!n) return std::nullopt;
  auto d = exact_sqrt(f.den());
  if (!d) return std::nullopt;
  return RatFunc(*n, *d);
}

}  // namespace odeq
