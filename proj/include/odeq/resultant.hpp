#pragma once

// Resultants and discriminants. Sign convention: determinant of the
// Sylvester matrix with the coefficients of a in the top rows, so that
// Res(a, b) = lc(a)^deg b * prod b(alpha) over the roots alpha of a.

#include <stdexcept>

#include "odeq/linalg.hpp"
#include "odeq/poly.hpp"

namespace odeq {

template <class R>
Matrix<R> sylvester_matrix(const Poly<R>& a, const Poly<R>& b) {
  const int m = a.degree(), n = b.degree();
  const size_t size = static_cast<size_t>(m + n);
  Matrix<R> s = zero_matrix<R>(size, size);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = a.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = b.coeff(n - k);
  return s;
}

// Resultant over an integral domain via a fraction-free determinant.
template <class R>
R resultant_domain(const Poly<R>& a, const Poly<R>& b) {
  if (a.is_zero() || b.is_zero()) return R(0);
  if (a.degree() == 0 && b.degree() == 0) return R(1);
  if (a.degree() == 0) {
    R r(1);
    for (int i = 0; i < b.degree(); ++i) r = r * a.lc();
    return r;
  }
  if (b.degree() == 0) {
    R r(1);
    for (int i = 0; i < a.degree(); ++i) r = r * b.lc();
    return r;
  }
  return bareiss_det(sylvester_matrix(a, b));
}

// Resultant over a field via the Euclidean recursion.
template <class K>
K resultant(Poly<K> a, Poly<K> b) {
  if (a.is_zero() || b.is_zero()) return K(0);
  K acc(1);
  for (;;) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) {
      K r = acc;
      for (int i = 0; i < m; ++i) r = r * b.lc();
      return r;
    }
    if (m == 0) {
      K r = acc;
      for (int i = 0; i < n; ++i) r = r * a.lc();
      return r;
    }
    // Res(a, b) = (-1)^{mn} Res(b, a) and Res(b, a) = lc(b)^{m - deg r} Res(b, r).
    Poly<K> r = divmod(a, b).second;
    if (r.is_zero()) return K(0);
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    for (int i = 0; i < m - r.degree(); ++i) acc = acc * b.lc();
    a = std::move(b);
    b = std::move(r);
  }
}

// disc(a) = (-1)^{n(n-1)/2} Res(a, a') / lc(a).
template <class K>
K discriminant(const Poly<K>& a) {
  const int n = a.degree();
  if (n < 1) throw std::domain_error("discriminant: degree < 1");
  K r = resultant(a, a.derivative()) / a.lc();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace odeq
