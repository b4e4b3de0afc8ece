#include "odeq/poly.hpp"

#include <optional>

namespace odeq {

namespace {

using ZVec = std::vector<Int>;

void trim(ZVec& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZVec to_integer(const Poly<Rat>& p) {
  Int l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  ZVec out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
  return out;
}

void make_primitive(ZVec& p) {
  Int g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

void pseudo_remainder(ZVec& a, const ZVec& b) {
  const size_t db = b.size() - 1;
  const Int& lb = b.back();
  while (a.size() > db) {
    const size_t shift = a.size() - 1 - db;
    const Int la = a.back();
    a.pop_back();
    for (auto& c : a) c *= lb;
    for (size_t k = 0; k < db; ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
}

Int eval_at(const ZVec& p, const Int& x) {
  Int acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Int max_norm(const ZVec& p) {
  Int m = 0;
  for (const auto& c : p) m = std::max(m, Int(abs(c)));
  return m;
}

// Exact quotient a / b in Z[v], or nullopt.
std::optional<ZVec> divide_exact(ZVec a, const ZVec& b) {
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) return std::nullopt;
  ZVec q(a.size() - db);
  Int r;
  for (size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    mpz_tdiv_qr(q[i - db].get_mpz_t(), r.get_mpz_t(), a[i].get_mpz_t(), b.back().get_mpz_t());
    if (r != 0) return std::nullopt;
    for (size_t k = 0; k <= db; ++k) a[i - db + k] -= q[i - db] * b[k];
  }
  for (const auto& c : a)
    if (c != 0) return std::nullopt;
  return q;
}

// Heuristic gcd of primitive inputs by evaluation at a large integer.
std::optional<ZVec> heuristic_gcd(const ZVec& A, const ZVec& B) {
  Int xi = 2 * std::min(max_norm(A), max_norm(B)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Int gamma;
    const Int a = eval_at(A, xi), b = eval_at(B, xi);
    mpz_gcd(gamma.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    ZVec G;
    const Int half = xi / 2;
    while (gamma != 0) {
      Int digit;
      mpz_fdiv_r(digit.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
      if (digit > half) digit -= xi;
      G.push_back(digit);
      gamma = (gamma - digit) / xi;
    }
    trim(G);
    if (!G.empty()) {
      make_primitive(G);
      if (divide_exact(A, G) && divide_exact(B, G)) return G;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Poly<Rat> gcd(const Poly<Rat>& a, const Poly<Rat>& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.degree() == 0 || b.degree() == 0) return Poly<Rat>(Rat(1));
  ZVec A = to_integer(a), B = to_integer(b);
  make_primitive(A);
  make_primitive(B);
  if (A.size() < B.size()) std::swap(A, B);
  if (auto G = heuristic_gcd(A, B)) A = std::move(*G), B.clear();
  while (!B.empty()) {
    if (B.size() == 1) return Poly<Rat>(Rat(1));
    pseudo_remainder(A, B);
    std::swap(A, B);
    if (!B.empty()) make_primitive(B);
  }
  const Int lead = A.back();
  std::vector<Rat> out;
  out.reserve(A.size());
  for (const auto& c : A) out.emplace_back(c, lead);
  return Poly<Rat>(std::move(out));
}

}  // namespace odeq
