#pragma once

// Rational functions K(v) over a coefficient field K, kept reduced with a
// monic denominator so that equality is structural.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "odeq/poly.hpp"

namespace odeq {

template <class K>
class Fraction {
 public:
  using coeff_type = K;

  Fraction() : den_(K(1)) {}
  Fraction(int c) : num_(K(c)), den_(K(1)) {}   // NOLINT(google-explicit-constructor)
  Fraction(long c) : num_(K(c)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  Fraction(const K& c) : num_(c), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  Fraction(const Poly<K>& p) : num_(p), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  Fraction(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  static Fraction var() { return Fraction(Poly<K>::var()); }

  const Poly<K>& num() const { return num_; }
  const Poly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  K constant_value() const { return num_.coeff(0); }
  // deg den - deg num; the order of vanishing at v = infinity.
  int order_at_infinity() const { return den_.degree() - num_.degree(); }

  Fraction operator-() const { return Fraction(-num_, den_, Reduced{}); }
  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.is_polynomial() && b.is_polynomial())
      return Fraction(a.num_ + b.num_, Poly<K>(K(1)), Reduced{});
    if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    if (a.is_zero() || b.is_zero()) return Fraction();
    if (a.is_polynomial() && b.is_polynomial())
      return Fraction(a.num_ * b.num_, Poly<K>(K(1)), Reduced{});
    // Cross-cancel before multiplying to keep the operands small.
    Poly<K> g1 = gcd(a.num_, b.den_);
    Poly<K> g2 = gcd(b.num_, a.den_);
    Poly<K> n = divmod(a.num_, g1).first * divmod(b.num_, g2).first;
    Poly<K> d = divmod(a.den_, g2).first * divmod(b.den_, g1).first;
    K l = d.lc();
    K inv = K(1) / l;
    return Fraction(n.scaled(inv), d.scaled(inv), Reduced{});
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
  Fraction& operator/=(const Fraction& o) { return *this = *this / o; }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Fraction inverse() const {
    if (is_zero()) throw std::domain_error("Fraction: division by zero");
    K inv = K(1) / num_.lc();
    return Fraction(den_.scaled(inv), num_.scaled(inv), Reduced{});
  }

  Fraction pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Fraction r(1), b = *this;
    unsigned u = static_cast<unsigned>(e);
    while (u) {
      if (u & 1u) r = r * b;
      u >>= 1u;
      if (u) b = b * b;
    }
    return r;
  }

  // d/dv.
  Fraction derivative() const {
    if (is_polynomial()) return Fraction(num_.derivative().scaled(K(1) / den_.lc()));
    return Fraction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  template <class R>
  R eval_in(const R& x) const {
    return num_.template eval_in<R>(x) / den_.template eval_in<R>(x);
  }
  Fraction compose(const Fraction& g) const { return eval_in<Fraction>(g); }

  std::optional<K> eval(const K& x) const {
    K d = den_.eval(x);
    if (detail::coeff_zero(d)) return std::nullopt;
    return num_.eval(x) / d;
  }

  template <class F>
  auto map_coeffs(F&& fn) const {
    using R = decltype(fn(std::declval<const K&>()));
    return Fraction<R>(num_.map_coeffs(fn), den_.map_coeffs(fn));
  }

 private:
  struct Reduced {};
  Fraction(Poly<K> n, Poly<K> d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Fraction: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<K>(K(1));
      return;
    }
    if (den_.degree() > 0) {
      Poly<K> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    }
    const K& l = den_.lc();
    if (!(l == K(1))) {
      K inv = K(1) / l;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly<K> num_;
  Poly<K> den_;
};

template <class K>
bool is_zero(const Fraction<K>& f) {
  return f.is_zero();
}

template <class K>
int canonical_cmp(const Fraction<K>& a, const Fraction<K>& b) {
  int c = canonical_cmp(a.num(), b.num());
  return c != 0 ? c : canonical_cmp(a.den(), b.den());
}

template <class K>
Fraction<K> exact_quotient(const Fraction<K>& a, const Fraction<K>& b) {
  return a / b;
}

template <class K>
Formatted format_signed(const Fraction<K>& f, std::span<const std::string> vars) {
  if (f.is_polynomial()) return format_signed(f.num(), vars);
  std::string n = format(f.num(), vars);
  std::string d = format(f.den(), vars);
  Formatted fn = format_signed(f.num(), vars);
  std::string num_part = fn.compound ? "(" + n + ")" : n;
  Formatted fd = format_signed(f.den(), vars);
  std::string den_part = (fd.compound || d.find('*') != std::string::npos) ? "(" + d + ")" : d;
  if (!fn.compound) {
    num_part = fn.body;
    return {fn.negative, num_part + "/" + den_part, true};
  }
  return {false, num_part + "/" + den_part, true};
}

template <class K>
std::string format(const Fraction<K>& f, std::span<const std::string> vars) {
  Formatted r = format_signed(f, vars);
  return (r.negative ? "-" : "") + r.body;
}

template <class K>
std::string to_string(const Fraction<K>& f, std::vector<std::string> vars) {
  return format(f, std::span<const std::string>(vars));
}

// Derivation of coefficients: applies d_dz to every coefficient of K(v).
template <class K>
Poly<K> coeff_derivative(const Poly<K>& p) {
  return p.map_coeffs([](const K& c) { return d_dz(c); });
}

template <class K>
Fraction<K> coeff_derivative(const Fraction<K>& f) {
  Poly<K> nz = coeff_derivative(f.num());
  if (f.is_polynomial() && f.den() == Poly<K>(K(1))) return Fraction<K>(nz);
  Poly<K> dz = coeff_derivative(f.den());
  return Fraction<K>(nz * f.den() - f.num() * dz, f.den() * f.den());
}

}  // namespace odeq
