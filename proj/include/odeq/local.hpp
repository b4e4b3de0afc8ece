#pragma once

// Newton-polygon analysis: leading terms of formal Puiseux solutions of an
// equation at a point of the z-line, and ramification of a plane curve over
// a point of its base line.

#include <vector>

#include "odeq/diffeq.hpp"
#include "odeq/proj_point.hpp"

namespace odeq {

struct PuiseuxLead {
  Rat exponent;             // lowest exponent n/m of the branch
  UPoly constraint;         // primitive, positive lc; 1 when unconstrained
  int branch_count = 1;     // distinct leading coefficients up to X -> zeta_m X
  int edge_length = 0;      // horizontal length of the Newton-polygon edge

  friend bool operator==(const PuiseuxLead&, const PuiseuxLead&) = default;
};

using LocalPoint = ProjPoint<Rat>;

// One entry per lower Newton-polygon edge at z = a (or z = infinity, in the
// chart t = 1/z), ordered by increasing exponent.
std::vector<PuiseuxLead> puiseux_leading(const DiffEq& eq, const LocalPoint& at);

// The Newton polygon data behind puiseux_leading: lattice points
// (i + j, ord c_ij - i) (finite) or (i + j, ord c_ij + i) (infinity).
struct NewtonPoint {
  int w;
  int v;
};
std::vector<NewtonPoint> lower_hull(std::vector<NewtonPoint> points);

// Ramification indices of the projection (S, T) -> T of F(S, T) = 0 over
// the point T = alpha. Sum equals deg_S F.
std::vector<int> ramification_indices(const BiPoly& F, const ProjPoint<RatFunc>& alpha);

}  // namespace odeq
