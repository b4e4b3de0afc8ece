#pragma once

// Roots in Q(z) of polynomials over Q(z).

#include <vector>

#include "odeq/ratfunc.hpp"

namespace odeq {

// Clears denominators: returns p * l with l in Q[z] such that every
// coefficient is a polynomial in z.
Poly<UPoly> clear_denominators(const RFPoly& p);

// Every r in Q(z) with P(r) = 0, each once, in canonical order.
std::vector<RatFunc> rational_function_roots(const RFPoly& p);

// Monic divisors of a nonzero polynomial over Q.
std::vector<UPoly> monic_divisors(const UPoly& p);

}  // namespace odeq
