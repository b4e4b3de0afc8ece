#pragma once

// Polynomials in (S, T) over Q(z). S stands for y', T for y.

#include <map>
#include <string>
#include <utility>

#include "odeq/errors.hpp"
#include "odeq/ratfunc.hpp"

namespace odeq {

// Degree cap from ODEQ_MAX_DEGREE (unset or invalid: 512).
int max_degree();
void check_degree(int degree, const char* where);

class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (degree in S, degree in T)
  using Terms = std::map<Key, RatFunc>;

  BiPoly() = default;
  BiPoly(long c) : BiPoly(RatFunc(c)) {}  // NOLINT(google-explicit-constructor)
  BiPoly(int c) : BiPoly(RatFunc(c)) {}   // NOLINT(google-explicit-constructor)
  BiPoly(const RatFunc& c) {              // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }

  static BiPoly monomial(const RatFunc& c, int i, int j);
  static BiPoly S() { return monomial(RatFunc(1), 1, 0); }
  static BiPoly T() { return monomial(RatFunc(1), 0, 1); }
  static BiPoly z() { return BiPoly(z_var()); }

  // Q(z)[S][T] views and back. from_poly_in_S(p): coefficient i of p is the
  // polynomial in T multiplying S^i.
  static BiPoly from_poly_in_S(const Poly<RFPoly>& p);
  static BiPoly from_poly_in_T(const Poly<RFPoly>& p);
  Poly<RFPoly> as_poly_in_S() const;
  Poly<RFPoly> as_poly_in_T() const;
  // Coefficients in S as elements of Q(z)(T).
  Poly<BiRat> over_T_field() const;
  // Coefficients in T as elements of Q(z)(S).
  Poly<BiRat> over_S_field() const;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(int i, int j) const;
  int deg_S() const;
  int deg_T() const;
  int total_degree() const;
  bool is_z_free() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.count({0, 0})); }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  BiPoly scaled(const RatFunc& c) const;
  BiPoly pow(unsigned e) const;

  BiPoly d_S() const;
  BiPoly d_T() const;
  BiPoly d_z() const;  // derivative of the coefficients
  BiPoly swap_ST() const;

  // Evaluate in an algebra R with R(RatFunc) and ring operations.
  template <class R>
  R eval_in(const R& s, const R& t) const {
    Poly<RFPoly> p = as_poly_in_S();
    R acc(0);
    for (int i = p.degree(); i >= 0; --i) {
      R c(0);
      const RFPoly& q = p.coeffs()[i];
      for (int j = q.degree(); j >= 0; --j) c = c * t + R(q.coeffs()[j]);
      acc = acc * s + c;
    }
    return acc;
  }
  BiPoly substitute(const BiPoly& s, const BiPoly& t) const { return eval_in<BiPoly>(s, t); }
  // Substitute z -> r(z) in every coefficient.
  BiPoly compose_z(const RatFunc& r) const;

  // Canonical representative of the line Q(z)^* * f: polynomial coefficients
  // in Q[z] with no common factor, integer content 1, positive leading
  // coefficient at the largest (S, T) exponent.
  BiPoly normalized() const;

  std::string str() const;

 private:
  Terms terms_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

}  // namespace odeq
