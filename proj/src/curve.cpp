#include "odeq/curve.hpp"

#include <algorithm>

#include "odeq/factor.hpp"
#include "odeq/local.hpp"
#include "odeq/resultant.hpp"
#include "odeq/roots.hpp"

namespace odeq {

namespace {

using HC = HyperCurve<RatFunc>;

HyperElemZ eval_in_curve(const HC& curve, const BiPoly& f, const HyperElemZ& s, const HyperElemZ& t) {
  HyperElemZ acc{};
  for (const auto& [k, c] : f.terms()) {
    HyperElemZ m = curve.constant(BiRat(c));
    for (int i = 0; i < k.first; ++i) m = curve.mul(m, s);
    for (int j = 0; j < k.second; ++j) m = curve.mul(m, t);
    acc = curve.add(acc, m);
  }
  return acc;
}

int genus_of_degree(int d) { return (d + 1) / 2 - 1; }

int sum_minus_one(const std::vector<int>& indices) {
  int s = 0;
  for (int e : indices) s += e - 1;
  return s;
}

}  // namespace

const char* genus_method_name(GenusMethod m) {
  switch (m) {
    case GenusMethod::LinearInVariable: return "linear-in-variable";
    case GenusMethod::HyperellipticNormalForm: return "hyperelliptic-normal-form";
    case GenusMethod::RiemannHurwitz: return "riemann-hurwitz";
  }
  return "?";
}

std::vector<ProjPoint<RatFunc>> split_roots(const RFPoly& P, bool& split) {
  std::vector<ProjPoint<RatFunc>> out;
  for (const RatFunc& r : rational_function_roots(P)) out.emplace_back(r);
  split = static_cast<int>(out.size()) == P.degree();
  if (P.degree() % 2 == 1) out.push_back(ProjPoint<RatFunc>::infinity());
  return out;
}

Genus0Param linear_parametrization(const DiffEq& eq) {
  const BiPoly& f = eq.f();
  Genus0Param p;
  const BiRat u = BiRat::var();
  if (eq.deg_S() == 1) {
    Poly<RFPoly> v = f.as_poly_in_S();
    p.parameter_is_s = false;
    p.g = -BiRat(v.coeff(0)) / BiRat(v.coeff(1));
    p.t_of_u = u;
    p.s_of_u = p.g;
    return p;
  }
  if (eq.deg_T() == 1) {
    Poly<RFPoly> v = f.as_poly_in_T();
    BiRat phi = -BiRat(v.coeff(0)) / BiRat(v.coeff(1));
    p.parameter_is_s = true;
    p.g = (u - coeff_derivative(phi)) / phi.derivative();
    p.t_of_u = phi;
    p.s_of_u = u;
    return p;
  }
  throw Error(ErrorKind::Unsupported, "equation is not linear in y or y'");
}

HyperModel quadratic_model(const DiffEq& eq) {
  const BiPoly& f = eq.f();
  const bool swapped = eq.deg_S() != 2;
  if (swapped && eq.deg_T() != 2)
    throw Error(ErrorKind::NotHyperellipticSupported, "no degree-2 presentation in y or y'");
  const Poly<RFPoly> v = swapped ? f.as_poly_in_T() : f.as_poly_in_S();
  const RFPoly a = v.coeff(2), b = v.coeff(1), c = v.coeff(0);
  const RFPoly disc = b * b - a * c.scaled(RatFunc(4));
  if (disc.is_zero()) throw Error(ErrorKind::NotAbsolutelyIrreducible, "zero discriminant");

  RFPoly core(RatFunc(1)), Q(RatFunc(1));
  for (const auto& sf : squarefree_decomposition(disc)) {
    if (sf.multiplicity % 2 == 1) core = core * sf.factor;
    for (int i = 0; i < sf.multiplicity / 2; ++i) Q = Q * sf.factor;
  }
  const RatFunc lead = disc.lc();
  RFPoly P;
  if (auto root = exact_sqrt(lead)) {
    P = core;
    Q = Q.scaled(*root);
  } else {
    P = core.scaled(lead);
  }
  if (P.degree() <= 0)
    throw Error(ErrorKind::NotAbsolutelyIrreducible, "curve splits into two rational components");

  HyperModel m;
  m.P = P;
  m.genus = genus_of_degree(P.degree());
  bool split = false;
  auto pts = split_roots(P, split);
  if (split) m.roots = std::move(pts);
  m.transform = {swapped, a, b, Q};

  const HC curve(P);
  const BiRat two_a = BiRat(a) * BiRat(2);
  // W = (Q y - b) / (2a)
  const HyperElemZ W{-BiRat(b) / two_a, BiRat(Q) / two_a};
  if (!swapped) {
    m.dx = W;
  } else {
    const HyperElemZ s = curve.x();
    const HyperElemZ num = curve.add(curve.mul(s, eval_in_curve(curve, f.d_T(), s, W)),
                                     eval_in_curve(curve, f.d_z(), s, W));
    auto inv = curve.inverse(eval_in_curve(curve, f.d_S(), s, W));
    if (!inv) throw Error(ErrorKind::NonInvertibleDenominator, "separant vanishes on the curve");
    m.dx = curve.scale(curve.mul(num, *inv), BiRat(-1));
  }
  m.dy = curve.dy(m.dx);
  return m;
}

GenusReport genus_riemann_hurwitz(const BiPoly& F) {
  const Poly<RFPoly> view = F.as_poly_in_S();
  const int n = view.degree();
  if (n < 1) throw Error(ErrorKind::DegenerateEquation, "no S");
  const RFPoly& lc = view.lc();
  // Monic model in S~ = lc * S with the same function field.
  std::vector<RFPoly> mon(static_cast<size_t>(n) + 1);
  RFPoly lp(RatFunc(1));
  for (int k = n - 1; k >= 0; --k) {
    mon[k] = view.coeff(k) * lp;
    lp = lp * lc;
  }
  mon[n] = RFPoly(RatFunc(1));
  const Poly<RFPoly> Fm(std::move(mon));
  const RFPoly disc = resultant_domain(Fm, Fm.derivative());
  if (disc.is_zero()) throw Error(ErrorKind::NotSquarefree, "zero discriminant in S");

  BranchTable table;
  table.degree = n;
  int total = 0;
  for (const auto& sf : squarefree_decomposition(disc)) {
    if (sf.multiplicity == 1) {
      table.simple_branch_count += sf.factor.degree();
      total += sf.factor.degree();
      continue;
    }
    auto roots = rational_function_roots(sf.factor);
    if (static_cast<int>(roots.size()) != sf.factor.degree())
      throw Error(ErrorKind::UnsupportedBranchLocus,
                  "multiple discriminant factor " + str(sf.factor, "T") + " is not split over Q(z)");
    for (const RatFunc& r : roots) {
      BranchPoint bp{ProjPoint<RatFunc>(r), ramification_indices(F, ProjPoint<RatFunc>(r))};
      total += sum_minus_one(bp.indices);
      table.points.push_back(std::move(bp));
    }
  }
  BranchPoint inf{ProjPoint<RatFunc>::infinity(), ramification_indices(F, ProjPoint<RatFunc>::infinity())};
  total += sum_minus_one(inf.indices);
  table.points.push_back(std::move(inf));
  table.total_ramification = total;

  const int twice = total - 2 * n + 2;
  if (twice < 0 || twice % 2 != 0)
    throw Error(ErrorKind::NotAbsolutelyIrreducible,
                "branch data inconsistent with an irreducible curve (2g = " + std::to_string(twice) + ")");
  return {twice / 2, GenusMethod::RiemannHurwitz, table};
}

GenusReport genus(const DiffEq& eq) {
  if (eq.deg_S() == 1 || eq.deg_T() == 1)
    return {0, GenusMethod::LinearInVariable, linear_parametrization(eq)};
  if (eq.deg_S() == 2 || eq.deg_T() == 2) {
    HyperModel m = quadratic_model(eq);
    const int g = m.genus;
    return {g, GenusMethod::HyperellipticNormalForm, std::move(m)};
  }
  return genus_riemann_hurwitz(eq.f());
}

HyperModel hyperelliptic_model(const DiffEq& eq) {
  if (eq.deg_S() != 2 && eq.deg_T() != 2) {
    GenusReport r = genus(eq);
    if (r.genus < 2)
      throw Error(ErrorKind::GenusTooSmall, "genus " + std::to_string(r.genus) + " < 2");
    throw Error(ErrorKind::NotHyperellipticSupported,
                "genus " + std::to_string(r.genus) + " curve without a degree-2 presentation");
  }
  HyperModel m = quadratic_model(eq);
  if (m.genus < 2) throw Error(ErrorKind::GenusTooSmall, "genus " + std::to_string(m.genus) + " < 2");
  return m;
}

RatFunc j_invariant_of(const RFPoly& P, const std::optional<std::vector<ProjPoint<RatFunc>>>& roots) {
  RFPoly cubic;
  if (P.degree() == 3) {
    cubic = P;
  } else if (P.degree() == 4) {
    std::optional<RatFunc> r;
    if (roots) {
      for (const auto& p : *roots)
        if (!p.is_infinity()) r = p.value();
    } else {
      auto rs = rational_function_roots(P);
      if (!rs.empty()) r = rs.front();
    }
    if (!r) throw Error(ErrorKind::NoRationalPoint, "quartic without a root in Q(z)");
    // X^4 P(r + 1/X) is a cubic since P(r) = 0.
    const RFPoly shifted = P.compose(RFPoly(std::vector<RatFunc>{*r, RatFunc(1)}));
    std::vector<RatFunc> rev(5);
    for (int k = 0; k <= 4; ++k) rev[4 - k] = shifted.coeff(k);
    cubic = RFPoly(std::move(rev));
  } else {
    throw Error(ErrorKind::Unsupported, "j-invariant needs a cubic or quartic model");
  }
  const RFPoly m = monic(cubic);
  // x = X - c2/3 gives X^3 + p X + q.
  const RatFunc c2 = m.coeff(2), c1 = m.coeff(1), c0 = m.coeff(0);
  const RatFunc p = c1 - c2 * c2 / RatFunc(3);
  const RatFunc q = c0 - c1 * c2 / RatFunc(3) + RatFunc(2) * c2 * c2 * c2 / RatFunc(27);
  const RatFunc p3 = RatFunc(4) * p * p * p;
  return RatFunc(1728) * p3 / (p3 + RatFunc(27) * q * q);
}

RatFunc j_invariant(const DiffEq& eq) {
  if (eq.deg_S() != 2 && eq.deg_T() != 2) {
    GenusReport r = genus(eq);
    if (r.genus != 1) throw Error(ErrorKind::Unsupported, "genus " + std::to_string(r.genus) + ", not 1");
    throw Error(ErrorKind::NotHyperellipticSupported, "genus 1 curve without a degree-2 presentation");
  }
  HyperModel m = quadratic_model(eq);
  if (m.genus != 1) throw Error(ErrorKind::Unsupported, "genus " + std::to_string(m.genus) + ", not 1");
  return j_invariant_of(m.P, m.roots);
}

}  // namespace odeq
