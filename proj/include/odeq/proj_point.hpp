#pragma once

// Points of the projective line over a field K: a finite value or infinity.

#include <optional>
#include <string>

#include "odeq/ratfunc.hpp"

namespace odeq {

template <class K>
class ProjPoint {
 public:
  ProjPoint() = default;
  ProjPoint(const K& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static ProjPoint infinity() { return ProjPoint(); }

  bool is_infinity() const { return !value_.has_value(); }
  const K& value() const { return *value_; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.value_ == b.value_; }

 private:
  std::optional<K> value_;
};

// Finite points first in canonical order, infinity last.
template <class K>
int canonical_cmp(const ProjPoint<K>& a, const ProjPoint<K>& b) {
  if (a.is_infinity() || b.is_infinity()) return (a.is_infinity() ? 1 : 0) - (b.is_infinity() ? 1 : 0);
  return canonical_cmp(a.value(), b.value());
}

template <class K>
bool operator<(const ProjPoint<K>& a, const ProjPoint<K>& b) {
  return canonical_cmp(a, b) < 0;
}

inline std::string str(const ProjPoint<Rat>& p) { return p.is_infinity() ? "inf" : p.value().str(); }
inline std::string str(const ProjPoint<RatFunc>& p) {
  return p.is_infinity() ? "inf" : str(p.value());
}

}  // namespace odeq
