#pragma once

// Arbitrary-precision rationals on top of GMP.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace odeq {

using Int = mpz_class;

class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const Int& n) : v_(n) {}
  Rat(const Int& n, const Int& d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p" or "p/q" with optional sign.
  static Rat parse(std::string_view text) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
      throw std::invalid_argument("Rat::parse: bad rational '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::domain_error("Rat::parse: zero denominator");
    q.canonicalize();
    return Rat(q);
  }

  const mpq_class& value() const { return v_; }
  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rat abs() const { return Rat(mpq_class(::abs(v_))); }
  Rat pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rat(n, d);
  }
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline int canonical_cmp(const Rat& a, const Rat& b) { return cmp(a.value(), b.value()); }
inline Rat exact_quotient(const Rat& a, const Rat& b) { return a / b; }
// The constant field carries the zero derivation.
inline Rat d_dz(const Rat&) { return Rat(0); }
inline bool is_constant(const Rat&) { return true; }

inline std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline std::optional<Rat> exact_sqrt(const Rat& q) {
  auto n = exact_sqrt(q.num());
  auto d = exact_sqrt(q.den());
  if (!n || !d) return std::nullopt;
  return Rat(*n, *d);
}

// Exact k-th root of a rational, if it exists (sign handled for odd k).
inline std::optional<Rat> exact_root(const Rat& q, unsigned k) {
  if (k == 0) return std::nullopt;
  if (q.is_zero()) return Rat(0);
  if (q.sign() < 0 && k % 2 == 0) return std::nullopt;
  auto root_int = [k](const Int& v) -> std::optional<Int> {
    Int a = ::abs(v);
    Int r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), k) == 0) return std::nullopt;
    return r;
  };
  auto n = root_int(q.num());
  auto d = root_int(q.den());
  if (!n || !d) return std::nullopt;
  Rat r(*n, *d);
  return q.sign() < 0 ? -r : r;
}

}  // namespace odeq
