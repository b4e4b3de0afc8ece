#pragma once

// Dense univariate polynomials over a coefficient ring K, lowest degree first.
//
// K must provide K(long), +, -, *, unary -, == and a free is_zero(const K&).
// Operations marked "field" additionally need K division.

#include <algorithm>
#include <cassert>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "odeq/rat.hpp"

namespace odeq {

// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

namespace detail {
template <class K>
bool coeff_zero(const K& c) {
  return is_zero(c);
}
}  // namespace detail

template <class K>
class Poly {
 public:
  using coeff_type = K;

  Poly() = default;
  Poly(long c) : Poly(K(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(K(c)) {}   // NOLINT(google-explicit-constructor)
  Poly(const K& c) {            // NOLINT(google-explicit-constructor)
    if (!detail::coeff_zero(c)) c_.push_back(c);
  }
  explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }

  static Poly monomial(const K& c, int d) {
    if (detail::coeff_zero(c)) return Poly();
    std::vector<K> v(static_cast<size_t>(d) + 1, K(0));
    v[d] = c;
    return Poly(std::move(v));
  }
  static Poly var() { return monomial(K(1), 1); }

  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  K coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
    return c_[i];
  }
  const K& lc() const {
    if (c_.empty()) throw std::domain_error("Poly::lc of zero polynomial");
    return c_.back();
  }
  K trailing() const { return coeff(0); }
  const std::vector<K>& coeffs() const { return c_; }
  // Lowest index with nonzero coefficient; kMinusInfinity for zero.
  int valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (!detail::coeff_zero(c_[i])) return static_cast<int>(i);
    return kMinusInfinity;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const K& s) const {
    if (detail::coeff_zero(s)) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> r(c_.size() - 1, K(0));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<long>(i));
    return Poly(std::move(r));
  }

  Poly pow(unsigned e) const {
    Poly result(K(1)), base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  K eval(const K& x) const {
    K acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Horner evaluation in an algebra R that embeds K.
  template <class R>
  R eval_in(const R& x) const {
    R acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + R(c_[i]);
    return acc;
  }

  // p(q(x)).
  Poly compose(const Poly& q) const { return eval_in<Poly>(q); }

  template <class F>
  auto map_coeffs(F&& fn) const {
    using R = decltype(fn(std::declval<const K&>()));
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(fn(x));
    return Poly<R>(std::move(out));
  }

  // Multiply by x^k (k >= 0) or drop the lowest -k coefficients (k < 0).
  Poly shift_degree(int k) const {
    if (is_zero()) return Poly();
    std::vector<K> r;
    if (k >= 0) {
      r.assign(static_cast<size_t>(k), K(0));
      r.insert(r.end(), c_.begin(), c_.end());
    } else {
      if (static_cast<size_t>(-k) >= c_.size()) return Poly();
      r.assign(c_.begin() + (-k), c_.end());
    }
    return Poly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero();
}

template <class K>
int canonical_cmp(const Poly<K>& a, const Poly<K>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = canonical_cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}

// ---------------------------------------------------------------- field ops

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly<K>(), a};
  const int db = b.degree();
  std::vector<K> r = a.coeffs();
  std::vector<K> q(static_cast<size_t>(a.degree() - db) + 1, K(0));
  const K inv_lc = K(1) / b.lc();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    K t = r[i] * inv_lc;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - t * b.coeff(j);
  }
  r.resize(static_cast<size_t>(db));
  return {Poly<K>(std::move(q)), Poly<K>(std::move(r))};
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
  return divmod(a, b).second;
}

template <class K>
Poly<K> monic(const Poly<K>& p) {
  if (p.is_zero()) return p;
  return p.scaled(K(1) / p.lc());
}

// Monic gcd; gcd(0, 0) = 0.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

// Over Q: primitive remainder sequence in Z[v].
Poly<Rat> gcd(const Poly<Rat>& a, const Poly<Rat>& b);

// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> ext_gcd(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0(K(1)), s1, t0, t1(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1;
    Poly<K> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(1) / r0.lc();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Solve s*a + t*b = c with deg s < deg b; requires gcd(a, b) | c.
template <class K>
std::pair<Poly<K>, Poly<K>> solve_diophantine(const Poly<K>& a, const Poly<K>& b,
                                              const Poly<K>& c) {
  auto [g, s, t] = ext_gcd(a, b);
  auto [q, r] = divmod(c, g);
  if (!r.is_zero()) throw std::domain_error("solve_diophantine: gcd does not divide rhs");
  s = s * q;
  t = t * q;
  if (!b.is_zero() && s.degree() >= b.degree()) {
    auto [qq, rr] = divmod(s, b);
    s = rr;
    t = t + qq * a;
  }
  return {s, t};
}

// ---------------------------------------------------------- integral domains

// Exact division in K[x] when K is an integral domain with exact_quotient.
template <class K>
Poly<K> exact_quotient(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("exact_quotient: division by zero");
  if (a.is_zero()) return Poly<K>();
  if (a.degree() < b.degree()) throw std::domain_error("exact_quotient: not divisible");
  const int db = b.degree();
  std::vector<K> r = a.coeffs();
  std::vector<K> q(static_cast<size_t>(a.degree() - db) + 1, K(0));
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    K t = exact_quotient(r[i], b.lc());
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - t * b.coeff(j);
  }
  for (int i = 0; i < db; ++i)
    if (!is_zero(r[i])) throw std::domain_error("exact_quotient: not divisible");
  return Poly<K>(std::move(q));
}

// ------------------------------------------------------------------ printing

// A printed coefficient: sign pulled out, and whether the body needs
// parentheses when it multiplies a monomial.
struct Formatted {
  bool negative = false;
  std::string body;
  bool compound = false;
};

inline Formatted format_signed(const Rat& r, std::span<const std::string>) {
  return {r.sign() < 0, r.abs().str(), false};
}

inline std::string monomial_str(const std::string& var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

template <class K>
Formatted format_signed(const Poly<K>& p, std::span<const std::string> vars);

template <class K>
std::string format(const Poly<K>& p, std::span<const std::string> vars) {
  if (p.is_zero()) return "0";
  const std::string var = vars.empty() ? std::string("x") : vars.front();
  auto rest = vars.empty() ? vars : vars.subspan(1);
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const K& c = p.coeffs()[k];
    if (is_zero(c)) continue;
    Formatted f = format_signed(c, rest);
    std::string m = monomial_str(var, k);
    std::string piece;
    if (f.compound) {
      piece = "(" + f.body + ")" + (m.empty() ? "" : "*" + m);
    } else if (f.body == "1" && !m.empty()) {
      piece = m;
    } else {
      piece = f.body + (m.empty() ? "" : "*" + m);
    }
    if (first) {
      out = (f.negative ? "-" : "") + piece;
      first = false;
    } else {
      out += (f.negative ? " - " : " + ") + piece;
    }
  }
  return out;
}

template <class K>
Formatted format_signed(const Poly<K>& p, std::span<const std::string> vars) {
  if (p.degree() <= 0) {
    if (p.is_zero()) return {false, "0", false};
    return format_signed(p.coeffs()[0], vars.empty() ? vars : vars.subspan(1));
  }
  int nonzero = 0;
  int k = 0;
  for (int i = 0; i <= p.degree(); ++i)
    if (!is_zero(p.coeffs()[i])) {
      ++nonzero;
      k = i;
    }
  if (nonzero == 1) {
    Formatted f = format_signed(p.coeffs()[k], vars.subspan(1));
    if (!f.compound) {
      std::string m = monomial_str(vars.front(), k);
      return {f.negative, f.body == "1" ? m : f.body + "*" + m, false};
    }
  }
  return {false, format(p, vars), true};
}

template <class K>
std::string to_string(const Poly<K>& p, std::vector<std::string> vars) {
  return format(p, std::span<const std::string>(vars));
}

using UPoly = Poly<Rat>;

}  // namespace odeq
