#include "odeq/painleve.hpp"

#include <variant>

namespace odeq {

namespace {

std::string rf(const RatFunc& f) { return to_string(f, {"z"}); }

Rat constant_value(const RatFunc& f) { return f.num().coeff(0) / f.den().coeff(0); }

PPVerdict genus0_check(const Genus0Param& param) {
  PPVerdict v;
  v.genus = 0;
  const BiRat& g = param.g;
  const std::string u = param.parameter_is_s ? "y'" : "y";
  if (g.den().degree() == 0 && g.num().degree() <= 2) {
    v.status = PPStatus::PP;
    const RatFunc inv = RatFunc(1) / g.den().coeff(0);
    v.normal_form = "u' = a0 + a1 u + a2 u^2 with u = " + u + ", a0 = " + rf(g.num().coeff(0) * inv) +
                    ", a1 = " + rf(g.num().coeff(1) * inv) + ", a2 = " + rf(g.num().coeff(2) * inv);
    return v;
  }
  v.status = PPStatus::NotPP;
  if (g.den().degree() > 0)
    v.witness = "u' = g(u) with u = " + u + " has a pole in u: denominator " + to_string(Fraction<RatFunc>(g.den()), {"u", "z"});
  else
    v.witness = "u' = g(u) with u = " + u + " has degree " + std::to_string(g.num().degree()) + " > 2 in u";
  return v;
}

// f = c(z) S^2 - P(T, z) with P = h (T^3 + q2 T^2 + q1 T + q0), q_i in Q.
std::optional<std::string> weierstrass_match(const DiffEq& eq) {
  const BiPoly& f = eq.f();
  if (f.deg_S() != 2) return std::nullopt;
  std::vector<RatFunc> p;
  RatFunc c;
  for (const auto& [key, coef] : f.terms()) {
    const auto [i, j] = key;
    if (i == 2 && j == 0) {
      c = coef;
    } else if (i == 0) {
      if (static_cast<int>(p.size()) <= j) p.resize(j + 1);
      p[j] = -coef;
    } else {
      return std::nullopt;
    }
  }
  if (c.is_zero() || p.size() != 4) return std::nullopt;
  const RFPoly P(p);
  const RatFunc h = P.lc() / c;
  const RFPoly Q = monic(P);
  for (int i = 0; i < 3; ++i)
    if (!Q.coeff(i).is_constant()) return std::nullopt;
  const Rat q0 = constant_value(Q.coeff(0)), q1 = constant_value(Q.coeff(1)), q2 = constant_value(Q.coeff(2));
  const Rat a = q1 - q2 * q2 / Rat(3);
  const Rat b = q0 - q1 * q2 / Rat(3) + Rat(2) * q2 * q2 * q2 / Rat(27);
  std::string nf = "(y')^2 = h (y^3 + a y + b) with h = " + rf(h) + ", a = " + a.str() + ", b = " + b.str();
  if (!q2.is_zero()) nf += " after y -> y - " + (q2 / Rat(3)).str();
  return nf;
}

PPVerdict genus1_check(const DiffEq& eq) {
  PPVerdict v;
  v.genus = 1;
  if (auto nf = weierstrass_match(eq)) {
    v.status = PPStatus::PP;
    v.normal_form = *nf;
    return v;
  }
  try {
    const RatFunc j = j_invariant(eq);
    if (!j.is_constant()) {
      v.status = PPStatus::NotPP;
      v.witness = "j-invariant depends on z: j = " + rf(j);
      return v;
    }
    v.reason = "constant j = " + rf(j) + " but not in the form (y')^2 = h (y^3 + a y + b) over Q(z)";
  } catch (const Error& e) {
    v.reason = std::string("j-invariant unavailable: ") + e.what();
  }
  v.status = PPStatus::Unsupported;
  return v;
}

PPVerdict hyper_check(const DiffEq& eq, const HyperModel& model) {
  PPVerdict v;
  v.genus = model.genus;
  HyperElemQ dx;
  if (eq.is_autonomous()) {
    PairXD pair = extract_pair(eq);
    if (pair.is_genus0()) throw std::logic_error("pp_check: genus mismatch");
    dx = pair.hyper().dx;
  } else {
    const AutonomyResult r = autonomous_test_hyper(model);
    if (r.verdict == Verdict::CertifiedNo) {
      v.status = PPStatus::NotPP;
      v.witness = "not strictly equivalent to an autonomous equation: " + r.reason;
      return v;
    }
    if (r.verdict != Verdict::Yes || !r.pair) {
      v.status = PPStatus::Unsupported;
      v.reason = "autonomy test " + std::string(verdict_name(r.verdict)) + ": " + r.reason;
      return v;
    }
    dx = r.pair->dx;
  }
  if (dx.is_zero()) {
    v.status = PPStatus::PP;
    v.normal_form = "y' = 0 on a constant model";
  } else {
    v.status = PPStatus::NotPP;
    v.witness = "D(x) = " + to_string(dx.e0, {"x"}) + " + (" + to_string(dx.e1, {"x"}) +
                ") y is nonzero on the constant model";
  }
  return v;
}

}  // namespace

const char* pp_status_name(PPStatus s) {
  switch (s) {
    case PPStatus::PP: return "PP";
    case PPStatus::NotPP: return "NotPP";
    case PPStatus::Unsupported: return "Unsupported";
  }
  return "?";
}

bool is_generic_point(const DiffEq& eq, const Rat& a) {
  for (const auto& [key, coef] : eq.f().terms()) {
    const auto value = coef.eval(a);
    if (!value || value->is_zero()) return false;
  }
  return true;
}

std::optional<BranchedSolution> movable_branch(const DiffEq& eq, int tries) {
  for (int k = 0; k < tries; ++k) {
    const Rat a((k + 1) / 2 * (k % 2 ? 1 : -1));
    if (!is_generic_point(eq, a)) continue;
    std::vector<PuiseuxLead> leads;
    try {
      leads = puiseux_leading(eq, LocalPoint(a));
    } catch (const Error&) {
      continue;
    }
    for (const auto& l : leads)
      if (!l.exponent.is_integer()) return BranchedSolution{a, l};
  }
  return std::nullopt;
}

PPVerdict pp_check(const DiffEq& eq) {
  const GenusReport rep = genus(eq);
  PPVerdict v;
  if (const auto* param = std::get_if<Genus0Param>(&rep.certificate)) {
    v = genus0_check(*param);
  } else if (rep.genus == 0) {
    v.genus = 0;
    v.reason = "genus 0 without a parametrization linear in y or y'";
  } else if (rep.genus == 1) {
    v = genus1_check(eq);
  } else if (const auto* model = std::get_if<HyperModel>(&rep.certificate)) {
    try {
      v = hyper_check(eq, *model);
    } catch (const Error& e) {
      v = PPVerdict{};
      v.genus = rep.genus;
      v.reason = e.what();
    }
  } else {
    v.genus = rep.genus;
    v.reason = "genus " + std::to_string(rep.genus) + " without a hyperelliptic model";
  }
  if (v.status == PPStatus::NotPP) v.branch = movable_branch(eq);
  return v;
}

bool pp_equivalence_consistency(const DiffEq& e1, const DiffEq& e2, const FieldIso& witness) {
  const IsoCheck check = check_field_iso(witness, hyperelliptic_model(e1), hyperelliptic_model(e2));
  if (!check.curve_identity || !check.derivation) return false;
  const PPVerdict v1 = pp_check(e1), v2 = pp_check(e2);
  return v1.status != PPStatus::Unsupported && v1.status == v2.status;
}

bool pp_equivalence_consistency(const DiffEq& e1, const DiffEq& e2, const Moebius<RatFunc>& witness) {
  const Genus0Param p1 = linear_parametrization(e1), p2 = linear_parametrization(e2);
  if (p1.parameter_is_s || p2.parameter_is_s) return false;
  if (!(conjugate_vf(witness, p1.g) == p2.g)) return false;
  const PPVerdict v1 = pp_check(e1), v2 = pp_check(e2);
  return v1.status != PPStatus::Unsupported && v1.status == v2.status;
}

}  // namespace odeq
