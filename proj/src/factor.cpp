#include "odeq/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace odeq {

namespace {

using i64 = long long;

// ------------------------------------------------------------ arithmetic mod p

class ModP {
 public:
  using Vec = std::vector<i64>;

  explicit ModP(i64 p) : p_(p) {}
  i64 prime() const { return p_; }

  i64 reduce(i64 a) const {
    a %= p_;
    return a < 0 ? a + p_ : a;
  }
  i64 reduce(const Int& a) const {
    Int r = a % Int(static_cast<long>(p_));
    long v = r.get_si();
    return reduce(static_cast<i64>(v));
  }
  i64 mul(i64 a, i64 b) const { return (a * b) % p_; }
  i64 pow(i64 a, i64 e) const {
    i64 r = 1;
    a = reduce(a);
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  i64 inv(i64 a) const {
    if (reduce(a) == 0) throw std::domain_error("ModP: inverse of zero");
    return pow(a, p_ - 2);
  }

  static void trim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
  static int deg(const Vec& v) { return static_cast<int>(v.size()) - 1; }

  Vec from(const UPoly& f) const {
    Vec v(f.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) {
      const Rat& c = f.coeffs()[i];
      v[i] = mul(reduce(c.num()), inv(reduce(c.den())));
    }
    trim(v);
    return v;
  }

  Vec add(const Vec& a, const Vec& b) const {
    Vec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p_;
    trim(r);
    return r;
  }
  Vec sub(const Vec& a, const Vec& b) const {
    Vec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = reduce(r[i] - b[i]);
    trim(r);
    return r;
  }
  Vec mul(const Vec& a, const Vec& b) const {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    trim(r);
    return r;
  }
  Vec scale(const Vec& a, i64 s) const {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], reduce(s));
    trim(r);
    return r;
  }
  std::pair<Vec, Vec> divmod(const Vec& a, const Vec& b) const {
    if (b.empty()) throw std::domain_error("ModP: division by zero");
    if (deg(a) < deg(b)) return {{}, a};
    Vec r = a;
    Vec q(static_cast<size_t>(deg(a) - deg(b)) + 1, 0);
    const i64 il = inv(b.back());
    for (int i = deg(a); i >= deg(b); --i) {
      if (r[i] == 0) continue;
      i64 t = mul(r[i], il);
      q[i - deg(b)] = t;
      for (int j = 0; j <= deg(b); ++j) r[i - deg(b) + j] = reduce(r[i - deg(b) + j] - t * b[j]);
    }
    r.resize(static_cast<size_t>(deg(b)));
    trim(r);
    trim(q);
    return {q, r};
  }
  Vec rem(const Vec& a, const Vec& b) const { return divmod(a, b).second; }
  Vec monic(const Vec& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  Vec gcd(Vec a, Vec b) const {
    while (!b.empty()) {
      Vec r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // Inverse of a modulo m (requires gcd 1).
  Vec inverse_mod(const Vec& a, const Vec& m) const {
    Vec r0 = m, r1 = rem(a, m), s0, s1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      Vec s2 = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (deg(r0) != 0) throw std::domain_error("ModP: not invertible");
    return rem(scale(s0, inv(r0[0])), m);
  }
  Vec derivative(const Vec& a) const {
    if (a.size() <= 1) return {};
    Vec r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], static_cast<i64>(i % p_));
    trim(r);
    return r;
  }
  Vec powmod(Vec base, const Int& e, const Vec& m) const {
    Vec r{1};
    base = rem(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }

 private:
  i64 p_;
};

using Vec = ModP::Vec;

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Vec, int>> distinct_degree(const ModP& F, Vec f) {
  std::vector<std::pair<Vec, int>> out;
  const Vec x{0, 1};
  Vec h = x;
  const Int p(static_cast<long>(F.prime()));
  for (int i = 1; 2 * i <= ModP::deg(f); ++i) {
    h = F.powmod(h, p, f);
    Vec g = F.gcd(f, F.sub(h, x));
    if (ModP::deg(g) > 0) {
      out.push_back({g, i});
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (ModP::deg(f) > 0) out.push_back({F.monic(f), ModP::deg(f)});
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus, odd p).
void equal_degree(const ModP& F, const Vec& g, int d, std::mt19937_64& rng,
                  std::vector<Vec>& out) {
  if (ModP::deg(g) == d) {
    out.push_back(g);
    return;
  }
  Int e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.prime()), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<i64> coef(0, F.prime() - 1);
  for (;;) {
    Vec a(static_cast<size_t>(ModP::deg(g)));
    for (auto& c : a) c = coef(rng);
    ModP::trim(a);
    if (ModP::deg(a) < 1) continue;
    Vec b = F.sub(F.powmod(a, e, g), Vec{1});
    Vec h = F.gcd(g, b);
    if (ModP::deg(h) > 0 && ModP::deg(h) < ModP::deg(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.monic(F.divmod(g, h).first), d, rng, out);
      return;
    }
  }
}

std::vector<i64> small_primes(i64 limit) {
  std::vector<bool> sieve(static_cast<size_t>(limit) + 1, true);
  std::vector<i64> out;
  for (i64 i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    if (i > 2) out.push_back(i);
    for (i64 j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return out;
}

// ------------------------------------------------------- integer polynomials

using ZVec = std::vector<Int>;

ZVec to_z(const UPoly& f) {
  ZVec v;
  for (const auto& c : f.coeffs()) {
    if (!c.is_integer()) throw std::invalid_argument("expected integer polynomial");
    v.push_back(c.num());
  }
  return v;
}

UPoly from_z(const ZVec& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(x);
  return UPoly(std::move(c));
}

Int mod_sym(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

ZVec zmul_mod(const ZVec& a, const ZVec& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& x : r) x = mod_sym(x, m);
  return r;
}

ZVec from_mod(const Vec& v) {
  ZVec r;
  for (i64 c : v) r.emplace_back(static_cast<long>(c));
  return r;
}

// Lift f == lc * prod u_i (mod p), u_i monic, to the same identity modulo
// p^k using partial-fraction cofactors.
std::vector<ZVec> hensel_lift(const ZVec& f, const std::vector<Vec>& u, const ModP& F, int k) {
  const size_t r = u.size();
  const Int p(static_cast<long>(F.prime()));
  const Int lc = f.back();
  const i64 lc_inv = F.inv(F.reduce(lc));
  std::vector<Vec> cof(r);
  for (size_t i = 0; i < r; ++i) {
    Vec v{1};
    for (size_t j = 0; j < r; ++j)
      if (j != i) v = F.mul(v, u[j]);
    cof[i] = F.inverse_mod(v, u[i]);
  }
  std::vector<ZVec> U(r);
  for (size_t i = 0; i < r; ++i) U[i] = from_mod(u[i]);
  Int pj = p;
  for (int step = 1; step < k; ++step) {
    Int next = pj * p;
    ZVec prod{lc};
    for (const auto& ui : U) prod = zmul_mod(prod, ui, next);
    Vec err;
    for (size_t i = 0; i < f.size(); ++i) {
      Int diff = f[i] - (i < prod.size() ? prod[i] : Int(0));
      diff = mod_sym(diff, next);
      if (diff % pj != 0) throw std::logic_error("hensel_lift: invariant broken");
      err.push_back(F.reduce(Int(diff / pj)));
    }
    ModP::trim(err);
    if (!err.empty()) {
      err = F.scale(err, lc_inv);
      for (size_t i = 0; i < r; ++i) {
        Vec delta = F.rem(F.mul(err, cof[i]), u[i]);
        for (size_t c = 0; c < delta.size(); ++c) U[i][c] += pj * Int(static_cast<long>(delta[c]));
        for (auto& x : U[i]) x = mod_sym(x, next);
      }
    }
    pj = next;
  }
  return U;
}

Int coefficient_bound(const ZVec& f) {
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Int two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(f.size() - 1));
  return ::abs(f.back()) * two_n * root;
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
  const size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

// ------------------------------------------------------------ public entry

Rat rational_content(const UPoly& p) {
  if (p.is_zero()) return Rat(0);
  Int num = 0, den = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
  }
  Rat content(num, den);
  return p.lc().sign() < 0 ? -content : content;
}

UPoly primitive_integer_part(const UPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rat(1) / rational_content(p));
}

std::vector<UPoly> factor_squarefree_integer(const UPoly& poly) {
  UPoly f0 = primitive_integer_part(poly);
  if (f0.degree() <= 1) return {f0};
  ZVec f = to_z(f0);

  // Pick the prime with the fewest modular factors among a few candidates.
  const auto primes = small_primes(20000);
  i64 best_p = 0;
  size_t best_count = 0;
  int tried = 0;
  for (i64 p : primes) {
    ModP F(p);
    if (F.reduce(f.back()) == 0) continue;
    Vec fp = F.from(f0);
    if (ModP::deg(F.gcd(fp, F.derivative(fp))) != 0) continue;
    size_t count = 0;
    for (const auto& [g, d] : distinct_degree(F, F.monic(fp))) count += ModP::deg(g) / d;
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (best_count == 1 || ++tried >= 5) break;
  }
  if (best_p == 0) throw std::logic_error("factor: no suitable prime");
  if (best_count == 1) return {f0};

  ModP F(best_p);
  std::mt19937_64 rng(0x0dec0deULL);
  std::vector<Vec> modular;
  for (const auto& [g, d] : distinct_degree(F, F.monic(F.from(f0))))
    equal_degree(F, g, d, rng, modular);

  const Int bound = 2 * coefficient_bound(f) + 1;
  int k = 1;
  Int pk(static_cast<long>(best_p));
  while (pk <= bound) {
    pk *= static_cast<long>(best_p);
    ++k;
  }
  std::vector<ZVec> lifted = hensel_lift(f, modular, F, k);

  std::vector<UPoly> result;
  UPoly rest = f0;
  std::vector<size_t> alive(lifted.size());
  std::iota(alive.begin(), alive.end(), 0);
  size_t s = 1;
  while (2 * s <= alive.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      const Int lc = rest.lc().num();
      ZVec g{lc};
      for (size_t i : idx) g = zmul_mod(g, lifted[alive[i]], pk);
      const Int rest0 = rest.coeff(0).num();
      if (g[0] != 0 && rest0 != 0 && (lc * rest0) % g[0] != 0) continue;
      UPoly cand = primitive_integer_part(from_z(g));
      auto [q, r] = divmod(rest, cand);
      if (!r.is_zero()) continue;
      result.push_back(cand);
      rest = primitive_integer_part(q);
      std::vector<size_t> keep;
      for (size_t i = 0; i < alive.size(); ++i)
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(alive[i]);
      alive = std::move(keep);
      found = true;
      break;
    } while (next_combination(idx, alive.size()));
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(rest);
  return result;
}

Factorization factor_univariate_rationals(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("factor: zero polynomial");
  Factorization out;
  out.unit = p.lc();
  for (const auto& sq : squarefree_decomposition(p)) {
    for (const auto& irr : factor_squarefree_integer(sq.factor))
      out.factors.push_back({monic(irr), sq.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    int c = canonical_cmp(a.first, b.first);
    if (c != 0) return c < 0;
    return a.second < b.second;
  });
  return out;
}

UPoly Factorization::expand() const {
  UPoly r(unit);
  for (const auto& [f, m] : factors) r = r * f.pow(static_cast<unsigned>(m));
  return r;
}

bool is_irreducible(const UPoly& p) {
  if (p.degree() <= 0) return false;
  if (!is_squarefree(p)) return false;
  return factor_squarefree_integer(p).size() == 1;
}

std::vector<Rat> rational_roots(const UPoly& p) {
  std::vector<Rat> roots;
  if (p.degree() <= 0) return roots;
  for (const auto& [f, m] : factor_univariate_rationals(p).factors)
    if (f.degree() == 1) roots.push_back(-f.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace odeq
