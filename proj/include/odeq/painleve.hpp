#pragma once

// Painleve property by genus: Riccati form in genus 0, the Weierstrass form
// (y')^2 = h (y^3 + a y + b) in genus 1, and D = 0 on a constant model in
// genus >= 2.

#include <optional>
#include <string>

#include "odeq/equivalence.hpp"
#include "odeq/local.hpp"

namespace odeq {

enum class PPStatus { PP, NotPP, Unsupported };
const char* pp_status_name(PPStatus s);

// A formal solution with a non-integer leading exponent at a point where no
// coefficient of f vanishes, hence at every generic point.
struct BranchedSolution {
  Rat at;
  PuiseuxLead lead;
};

struct PPVerdict {
  PPStatus status = PPStatus::Unsupported;
  int genus = -1;
  std::string normal_form;  // PP
  std::string witness;      // NotPP
  std::string reason;       // Unsupported
  std::optional<BranchedSolution> branch;
};

PPVerdict pp_check(const DiffEq& eq);

// True when no nonzero coefficient of the normalized f vanishes at z = a.
bool is_generic_point(const DiffEq& eq, const Rat& a);

// First branched lead over the generic points 0, 1, -1, 2, -2, ...
std::optional<BranchedSolution> movable_branch(const DiffEq& eq, int tries = 12);

// Both verdicts definite and equal. The witness is re-checked first; a
// failing witness gives false.
bool pp_equivalence_consistency(const DiffEq& e1, const DiffEq& e2, const FieldIso& witness);
// Genus 0 with u = y on both sides: y2 = m(y1) must carry g1 to g2.
bool pp_equivalence_consistency(const DiffEq& e1, const DiffEq& e2, const Moebius<RatFunc>& witness);

}  // namespace odeq
