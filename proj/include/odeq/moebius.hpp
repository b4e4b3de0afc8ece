#pragma once

// Moebius transformations v -> (a v + b) / (c v + d) over a field K and the
// conjugation of vector fields h(v) d/dv by them.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "odeq/proj_point.hpp"

namespace odeq {

template <class K>
class Moebius {
 public:
  Moebius() : a_(1), b_(0), c_(0), d_(1) {}
  Moebius(K a, K b, K c, K d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (is_zero(det())) throw std::invalid_argument("Moebius: singular matrix");
    normalize();
  }

  static Moebius identity() { return Moebius(); }

  const K& a() const { return a_; }
  const K& b() const { return b_; }
  const K& c() const { return c_; }
  const K& d() const { return d_; }
  K det() const { return a_ * d_ - b_ * c_; }

  ProjPoint<K> operator()(const ProjPoint<K>& p) const {
    if (p.is_infinity()) {
      if (is_zero(c_)) return ProjPoint<K>::infinity();
      return ProjPoint<K>(a_ / c_);
    }
    K den = c_ * p.value() + d_;
    if (is_zero(den)) return ProjPoint<K>::infinity();
    return ProjPoint<K>((a_ * p.value() + b_) / den);
  }

  // (this o o)(v) = this(o(v)).
  Moebius compose(const Moebius& o) const {
    return Moebius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                   c_ * o.b_ + d_ * o.d_);
  }
  Moebius inverse() const { return Moebius(d_, -b_, -c_, a_); }

  Fraction<K> as_function() const {
    return Fraction<K>(Poly<K>(std::vector<K>{b_, a_}), Poly<K>(std::vector<K>{d_, c_}));
  }

  friend bool operator==(const Moebius& x, const Moebius& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

 private:
  void normalize() {
    const K* first = !is_zero(a_) ? &a_ : !is_zero(b_) ? &b_ : &c_;
    const K inv = K(1) / *first;
    a_ = a_ * inv;
    b_ = b_ * inv;
    c_ = c_ * inv;
    d_ = d_ * inv;
  }

  K a_, b_, c_, d_;
};

// Sends p, q, r to 0, 1, infinity.
template <class K>
Moebius<K> normalizer(const ProjPoint<K>& p, const ProjPoint<K>& q, const ProjPoint<K>& r) {
  if (p == q || q == r || p == r) throw std::invalid_argument("normalizer: points not distinct");
  if (r.is_infinity()) return Moebius<K>(K(1), -p.value(), K(0), q.value() - p.value());
  if (q.is_infinity()) return Moebius<K>(K(1), -p.value(), K(1), -r.value());
  if (p.is_infinity()) return Moebius<K>(K(0), q.value() - r.value(), K(1), -r.value());
  const K qr = q.value() - r.value(), qp = q.value() - p.value();
  return Moebius<K>(qr, -p.value() * qr, qp, -r.value() * qp);
}

// Sends p to 0 and q to infinity.
template <class K>
Moebius<K> normalizer(const ProjPoint<K>& p, const ProjPoint<K>& q) {
  if (p == q) throw std::invalid_argument("normalizer: points not distinct");
  if (q.is_infinity()) return Moebius<K>(K(1), -p.value(), K(0), K(1));
  if (p.is_infinity()) return Moebius<K>(K(0), K(1), K(1), -q.value());
  return Moebius<K>(K(1), -p.value(), K(1), -q.value());
}

// Sends p to infinity.
template <class K>
Moebius<K> normalizer(const ProjPoint<K>& p) {
  if (p.is_infinity()) return Moebius<K>();
  return Moebius<K>(K(0), K(1), K(1), -p.value());
}

// The unique map sending (p1, q1, r1) to (p2, q2, r2).
template <class K>
Moebius<K> triple_map(const ProjPoint<K>& p1, const ProjPoint<K>& q1, const ProjPoint<K>& r1,
                      const ProjPoint<K>& p2, const ProjPoint<K>& q2, const ProjPoint<K>& r2) {
  return normalizer(p2, q2, r2).inverse().compose(normalizer(p1, q1, r1));
}

// q^n p(a/q) for deg p <= n.
template <class K>
Poly<K> homogenize(const Poly<K>& p, int n, const Poly<K>& a, const Poly<K>& q) {
  Poly<K> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * a + q.pow(static_cast<unsigned>(p.degree() - i)).scaled(p.coeff(i));
  return acc * q.pow(static_cast<unsigned>(n - std::max(p.degree(), 0)));
}

// f(m(v)).
template <class K>
Fraction<K> substitute(const Fraction<K>& f, const Moebius<K>& m) {
  const Poly<K> top(std::vector<K>{m.b(), m.a()}), bot(std::vector<K>{m.d(), m.c()});
  const int n = std::max(f.num().degree(), 0), k = std::max(f.den().degree(), 0);
  const int e = std::max(n, k);
  return Fraction<K>(homogenize(f.num(), e, top, bot), homogenize(f.den(), e, top, bot));
}

// Vector field f2 d/dy with D+ = d/dz + f d/dv transported along y = m(u):
// f2(y) = (d/dz m)(u) + m'(u) f1(u) at u = m^-1(y).
template <class K>
Fraction<K> conjugate_vf(const Moebius<K>& m, const Fraction<K>& h1) {
  // With p = d y - b, q = a - c y and det = ad - bc:
  // f2 = (H(p, q) + det q^2 f1(p/q)) / det^2, H the homogenized d/dz part.
  const Poly<K> top(std::vector<K>{m.b(), m.a()}), bot(std::vector<K>{m.d(), m.c()});
  const Poly<K> quad = coeff_derivative(top) * bot - top * coeff_derivative(bot);
  const Poly<K> p(std::vector<K>{-m.b(), m.d()}), q(std::vector<K>{m.a(), -m.c()});
  const K det = m.det();
  const int n = std::max(h1.num().degree(), 0), k = h1.den().degree();
  const int e = 2 + k - n, s = std::max(0, -e);
  const Poly<K> N = homogenize(h1.num(), n, p, q), M = homogenize(h1.den(), k, p, q);
  const Poly<K> num = homogenize(quad, 2, p, q) * M * q.pow(static_cast<unsigned>(s)) +
                      N * q.pow(static_cast<unsigned>(e + s)).scaled(det);
  return Fraction<K>(num, M * q.pow(static_cast<unsigned>(s)).scaled(det * det));
}

template <class K>
std::string str(const Moebius<K>& m, const std::string& var = "v") {
  const std::vector<std::string> vars = std::is_same_v<K, Rat> ? std::vector<std::string>{var}
                                                                : std::vector<std::string>{var, "z"};
  return to_string(m.as_function(), vars);
}

}  // namespace odeq
