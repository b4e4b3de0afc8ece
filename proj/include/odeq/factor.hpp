#pragma once

// Squarefree decomposition over fields of characteristic zero and complete
// factorization of univariate polynomials over Q.

#include <utility>
#include <vector>

#include "odeq/poly.hpp"

namespace odeq {

template <class K>
struct SquarefreeFactor {
  Poly<K> factor;
  int multiplicity = 0;
};

// Yun's algorithm: p = lc(p) * prod factor_i^i with monic, pairwise
// coprime, squarefree, nonconstant factors listed by increasing multiplicity.
template <class K>
std::vector<SquarefreeFactor<K>> squarefree_decomposition(const Poly<K>& p) {
  std::vector<SquarefreeFactor<K>> out;
  if (p.degree() <= 0) return out;
  Poly<K> f = monic(p);
  Poly<K> df = f.derivative();
  Poly<K> a = gcd(f, df);
  Poly<K> b = divmod(f, a).first;
  Poly<K> c = divmod(df, a).first;
  Poly<K> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly<K> g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

// Product of the distinct irreducible factors, monic.
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
  if (p.degree() <= 0) return Poly<K>(K(1));
  return divmod(monic(p), gcd(p, p.derivative())).first;
}

template <class K>
bool is_squarefree(const Poly<K>& p) {
  if (p.degree() <= 0) return !p.is_zero();
  return gcd(p, p.derivative()).degree() == 0;
}

struct Factorization {
  Rat unit;
  // Monic irreducible factors over Q with multiplicities, sorted by
  // (degree, canonical order).
  std::vector<std::pair<UPoly, int>> factors;

  UPoly expand() const;
};

// Complete factorization over Q; p must be nonzero.
Factorization factor_univariate_rationals(const UPoly& p);

// Irreducible factors of a squarefree primitive integer polynomial
// (Zassenhaus: modular factorization, Hensel lifting, recombination).
std::vector<UPoly> factor_squarefree_integer(const UPoly& f);

bool is_irreducible(const UPoly& p);

// Integer content and primitive part; the primitive part has positive lc.
Rat rational_content(const UPoly& p);
UPoly primitive_integer_part(const UPoly& p);

// All rational roots, ascending, without multiplicity.
std::vector<Rat> rational_roots(const UPoly& p);

}  // namespace odeq
