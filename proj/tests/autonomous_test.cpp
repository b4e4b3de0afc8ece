#include <gtest/gtest.h>

#include <map>

#include "odeq/autonomous.hpp"
#include "odeq/integrate.hpp"
#include "odeq/linalg.hpp"
#include "odeq/parser.hpp"
#include "test_util.hpp"

using namespace odeq;
using namespace odeq::testing;

namespace {

const QFunc v = QFunc::var();

QFunc vpow(int k) { return v.pow(k); }

template <class C>
HyperElem<C> eval_on(const HyperCurve<C>& c, const BiPoly& f, const HyperElem<C>& s, const HyperElem<C>& t) {
  HyperElem<C> acc{};
  for (const auto& [k, coef] : f.terms()) {
    HyperElem<C> m = c.constant(Fraction<C>(coef.constant_value()));
    for (int i = 0; i < k.first; ++i) m = c.mul(m, s);
    for (int j = 0; j < k.second; ++j) m = c.mul(m, t);
    acc = c.add(acc, m);
  }
  return acc;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::Unsupported;
}

std::string product_text(const std::string& var_expr, int n) {
  std::string out;
  for (int j = 1; j <= n; ++j) out += (j > 1 ? "*" : "") + std::string("(") + var_expr + " - " + std::to_string(j) + ")";
  return out;
}

Moebius<RatFunc> random_moebius(Random& rnd) {
  for (;;) {
    RatFunc a = rnd.ratfunc(1), b = rnd.ratfunc(1), c = rnd.ratfunc(1), d = rnd.ratfunc(1);
    if (!(a * d - b * c).is_zero()) return Moebius<RatFunc>(a, b, c, d);
  }
}

Moebius<Rat> random_qmoebius(Random& rnd) {
  for (;;) {
    Rat a = rnd.rational(), b = rnd.rational(), c = rnd.rational(), d = rnd.rational();
    if (!(a * d - b * c).is_zero()) return Moebius<Rat>(a, b, c, d);
  }
}

// Rational function in u over Q(z) with degrees <= 4.
BiRat random_field(Random& rnd) {
  auto poly = [&](int deg) {
    std::vector<RatFunc> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rnd.ratfunc(1));
    return RFPoly(std::move(c));
  };
  for (;;) {
    RFPoly n = poly(static_cast<int>(rnd.integer(0, 4))), d = poly(static_cast<int>(rnd.integer(0, 4)));
    if (!n.is_zero() && !d.is_zero()) return BiRat(n, d);
  }
}

// Split rational function over Q with distinct rational zeros and poles.
QFunc random_split_field(Random& rnd) {
  QFunc h(rnd.nonzero_rational());
  std::vector<Rat> used;
  const int zeros = static_cast<int>(rnd.integer(0, 3)), poles = static_cast<int>(rnd.integer(0, 2));
  for (int k = 0; k < zeros + poles; ++k) {
    Rat r = rnd.rational(6);
    if (std::find(used.begin(), used.end(), r) != used.end()) continue;
    used.push_back(r);
    QFunc f = (v - QFunc(r)).pow(static_cast<int>(rnd.integer(1, 2)));
    h = k < zeros ? h * f : h / f;
  }
  return h;
}

// Coefficient vector of N = h * M over the monomials u^i z^j.
std::map<std::pair<int, int>, Rat> flatten(const BiRat& h, const BiRat& M) {
  BiRat n = h * M;
  EXPECT_TRUE(n.is_polynomial());
  std::map<std::pair<int, int>, Rat> out;
  const RFPoly N = n.num();
  for (int i = 0; i <= N.degree(); ++i) {
    const RatFunc& c = N.coeffs()[i];
    EXPECT_TRUE(c.is_polynomial());
    for (int j = 0; j <= c.num().degree(); ++j)
      if (!c.num().coeff(j).is_zero()) out[{i, j}] = c.num().coeff(j) / c.den().lc();
  }
  return out;
}

bool in_span(const std::vector<BiRat>& basis, const BiRat& target, const BiRat& M) {
  std::vector<std::map<std::pair<int, int>, Rat>> vecs;
  for (const auto& b : basis) vecs.push_back(flatten(b, M));
  vecs.push_back(flatten(target, M));
  std::map<std::pair<int, int>, size_t> index;
  for (const auto& m : vecs)
    for (const auto& [k, c] : m) index.emplace(k, index.size());
  auto rank_of = [&](size_t count) {
    Matrix<Rat> mat = zero_matrix<Rat>(count, index.size());
    for (size_t r = 0; r < count; ++r)
      for (const auto& [k, c] : vecs[r]) mat[r][index[k]] = c;
    return rank(mat);
  };
  return rank_of(basis.size()) == rank_of(basis.size() + 1);
}

bool is_automorphism(const BiRat& g, const BiRat& h) {
  return h * g.derivative() - g * h.derivative() == coeff_derivative(h);
}

}  // namespace

TEST(ExtractPair, Examples) {
  PairXD p5 = extract_pair(parse_equation("S - T^5"));
  ASSERT_TRUE(p5.is_genus0());
  EXPECT_EQ(p5.genus0().h, vpow(5));

  PairXD p1 = extract_pair(parse_equation("S - T"));
  EXPECT_EQ(p1.genus0().h, v);

  PairXD ph = extract_pair(parse_equation("S^2 - (T^6 - 1)"));
  ASSERT_FALSE(ph.is_genus0());
  const HyperPair& hp = ph.hyper();
  auto c = hp.curve();
  EXPECT_EQ(hp.P, up({-1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(hp.dx, c.y());
  EXPECT_EQ(hp.dy, c.constant(QFunc(up({0, 0, 0, 0, 0, 3}))));
  EXPECT_EQ(c.mul(c.scale(c.y(), QFunc(2)), hp.dy), c.scale(hp.dx, QFunc(hp.P.derivative())));

  EXPECT_EQ(kind_of([] { extract_pair(parse_equation("S - T^3 - z")); }), ErrorKind::Unsupported);
}

TEST(ExtractPair, ConicsAreParametrized) {
  for (const char* text : {"S^2 - T^2 - 1", "S^2 - T", "S^2 - T^2 + 3*T - 2", "S^2 + S*T - T^2 - 1"}) {
    PairXD p = extract_pair(parse_equation(text));
    ASSERT_TRUE(p.is_genus0()) << text;
    const Genus0Pair& g = p.genus0();
    // D(y) = y' along D = h d/dv, and f(y', y) = 0.
    EXPECT_EQ(g.h * g.y.derivative(), g.yp) << text;
    EXPECT_TRUE(parse_bipoly(text).template eval_in<QFunc>(g.yp, g.y).is_zero()) << text;
  }
}

TEST(MakeAutonomous, RoundTrips) {
  PairXD ph = extract_pair(parse_equation("S^2 - (T^6 - 1)"));
  const HyperPair& hp = ph.hyper();
  EXPECT_EQ(make_autonomous(hp, hp.curve().x()), parse_equation("S^2 - (T^6 - 1)"));
  PairXD pg = genus0_pair(vpow(2));
  EXPECT_EQ(make_autonomous(pg.genus0(), v), parse_equation("S - T^2"));
  for (const char* text : {"S - T^5", "S^2 - T^5 - 1", "S^2 - T^3 + T", "S^3 - T", "S^2 + S*T - T^2 - 1",
                           "T^2 - S^3 - 1", "S^2 - (T^6 - 1)"}) {
    DiffEq eq = parse_equation(text);
    PairXD p = extract_pair(eq);
    DiffEq back = p.is_genus0() ? make_autonomous(p.genus0(), p.genus0().y) : make_autonomous(p.hyper(), p.hyper().y);
    EXPECT_EQ(back, eq) << text << " -> " << back.str();
  }
}

TEST(MakeAutonomous, GeneratorY) {
  PairXD ph = extract_pair(parse_equation("S^2 - (T^6 - 1)"));
  const HyperPair& hp = ph.hyper();
  auto c = hp.curve();
  DiffEq G = make_autonomous(hp, c.y());
  EXPECT_EQ(G, parse_equation("S^6 - 729*(T^2 + 1)^5"));
  // G(D(y), y) vanishes on the curve.
  EXPECT_TRUE(eval_on(c, G.f(), hp.dy, c.y()).is_zero());
  // The displayed s^2 (s')^6 - 6 (s^2)^6 + (s')^6 does not.
  BiPoly displayed = parse_bipoly("T^2*S^6 - 6*T^12 + S^6");
  EXPECT_NE(G.f(), displayed.normalized());
  EXPECT_FALSE(eval_on(c, displayed, hp.dy, c.y()).is_zero());
}

TEST(MakeAutonomous, NotAGenerator) {
  PairXD ph = extract_pair(parse_equation("S^2 - (T^6 - 1)"));
  const HyperPair& hp = ph.hyper();
  auto c = hp.curve();
  EXPECT_EQ(kind_of([&] { make_autonomous(hp, c.mul(c.x(), c.x())); }), ErrorKind::NotAGenerator);
  EXPECT_EQ(kind_of([&] { make_autonomous(hp, c.constant(QFunc(3))); }), ErrorKind::NotAGenerator);
  // v^2 under D = v d/dv only sees Q(v^2).
  EXPECT_EQ(kind_of([] { make_autonomous(genus0_pair(v).genus0(), v * v); }), ErrorKind::NotAGenerator);
}

TEST(Disguise, ScaleTExample) {
  DiffEq base = parse_equation("S^2 - " + product_text("T", 6));
  Disguise d = disguise(base, DisguiseMode::ScaleT, RatFunc(1) / z_var());
  EXPECT_EQ(d.equation, parse_equation("(z*S + T)^2 - " + product_text("z*T", 6)));
  EXPECT_EQ(disguise(base, DisguiseMode::ScaleT, RatFunc(1)).equation, base);
}

TEST(Disguise, InverseSubstitutionRecoversBase) {
  Random rnd(51);
  for (const char* text : {"S^2 - (T^6 - 1)", "S - T^5", "S^2 - T^3 - 1", "S^3 - T^2 + T"}) {
    DiffEq base = parse_equation(text);
    for (int it = 0; it < 3; ++it) {
      RatFunc phi = rnd.nonzero_ratfunc(2);
      Disguise d = disguise(base, DisguiseMode::ScaleT, phi);
      // y_new = phi y_old: S_new = phi S_old + phi' T_old, T_new = phi T_old.
      BiPoly back = d.equation.f().substitute(BiPoly::S().scaled(phi) + BiPoly::T().scaled(phi.derivative()),
                                              BiPoly::T().scaled(phi));
      EXPECT_EQ(back.normalized(), base.f()) << text;
    }
  }
}

TEST(Disguise, ScaleSUsesDerivativeGenerator) {
  DiffEq base = parse_equation("S^2 - (T^6 - 1)");
  Disguise d = disguise(base, DisguiseMode::ScaleS, RatFunc(1));
  EXPECT_EQ(d.base, parse_equation("S^6 - 729*(T^2 + 1)^5"));
  EXPECT_EQ(d.equation, d.base);
  Disguise dz = disguise(base, DisguiseMode::ScaleS, z_var());
  EXPECT_FALSE(dz.equation.is_autonomous());
}

TEST(VfDivisor, Examples) {
  EXPECT_EQ(vf_divisor(vpow(2)), (VectorFieldDivisor{{ProjPoint<Rat>(Rat(0)), 2}}));
  EXPECT_EQ(vf_divisor(QFunc(1)), (VectorFieldDivisor{{ProjPoint<Rat>::infinity(), 2}}));
  EXPECT_EQ(vf_divisor(vpow(5)),
            (VectorFieldDivisor{{ProjPoint<Rat>(Rat(0)), 5}, {ProjPoint<Rat>::infinity(), -3}}));
  EXPECT_EQ(kind_of([] { vf_divisor(v * v + QFunc(1)); }), ErrorKind::NonRationalSupport);
}

TEST(VfDivisor, DegreeTwoAndEquivariance) {
  Random rnd(52);
  for (int it = 0; it < 60; ++it) {
    QFunc h = random_split_field(rnd);
    VectorFieldDivisor d = vf_divisor(h);
    int total = 0;
    for (const auto& p : d) {
      EXPECT_NE(p.order, 0);
      total += p.order;
    }
    EXPECT_EQ(total, 2);
    Moebius<Rat> m = random_qmoebius(rnd);
    VectorFieldDivisor moved = vf_divisor(conjugate_vf(m, h));
    ASSERT_EQ(moved.size(), d.size());
    for (const auto& p : d) {
      auto it = std::find_if(moved.begin(), moved.end(), [&](const VFPoint& q) { return q.point == m(p.point); });
      ASSERT_NE(it, moved.end());
      EXPECT_EQ(it->order, p.order);
    }
  }
}

TEST(ConjugateVf, Examples) {
  const BiRat u = BiRat::var();
  const BiRat zb(z_var());
  const BiRat g = u * u * u - u + BiRat(RatFunc(2));
  EXPECT_EQ(conjugate_vf(Moebius<RatFunc>(), g), g);
  // y = u + z: y' = 1 + g(y - z).
  Moebius<RatFunc> shift(RatFunc(1), z_var(), RatFunc(0), RatFunc(1));
  EXPECT_EQ(conjugate_vf(shift, g), BiRat(1) + g.compose(u - zb));
  // y = z u with u' = u: y' = u + z u = y (1 + z) / z.
  Moebius<RatFunc> scale(z_var(), RatFunc(0), RatFunc(0), RatFunc(1));
  EXPECT_EQ(conjugate_vf(scale, u), u * (BiRat(1) + zb) / zb);
}

TEST(ConjugateVf, GroupActionLaws) {
  Random rnd(53);
  for (int it = 0; it < 100; ++it) {
    Moebius<RatFunc> m1 = random_moebius(rnd), m2 = random_moebius(rnd);
    BiRat h = random_field(rnd);
    EXPECT_EQ(conjugate_vf(m2, conjugate_vf(m1, h)), conjugate_vf(m2.compose(m1), h));
    EXPECT_EQ(conjugate_vf(m1.inverse(), conjugate_vf(m1, h)), h);
  }
}

TEST(ConjugateVf, DisplayedFormulaHasExtraTerm) {
  // With AD - BC = 1 the displayed identity carries an additional (-Cy + A)^2.
  Random rnd(54);
  const BiRat y = BiRat::var();
  for (int it = 0; it < 10; ++it) {
    RatFunc A = rnd.nonzero_ratfunc(1), B = rnd.ratfunc(1), C = rnd.ratfunc(1);
    RatFunc D = (RatFunc(1) + B * C) / A;
    BiRat f1 = random_field(rnd);
    auto K = [](const RatFunc& r) { return BiRat(r); };
    BiRat p = K(D) * y - K(B), q = -K(C) * y + K(A);
    BiRat displayed = K(A.derivative() * C - A * C.derivative()) * p * p +
                      K(A.derivative() * D - A * D.derivative() + B.derivative() * C - B * C.derivative()) * p * q +
                      K(B.derivative() * D - B * D.derivative()) * q * q + q * q + q * q * f1.compose(p / q);
    BiRat chain = conjugate_vf(Moebius<RatFunc>(A, B, C, D), f1);
    EXPECT_EQ(displayed - q * q, chain);
    EXPECT_NE(displayed, chain);
  }
}

TEST(PairEquivalence, Examples) {
  Genus0Pair a = genus0_pair(vpow(5)).genus0();
  auto same = pair_equivalent_genus0(a, a);
  ASSERT_EQ(same.verdict, Verdict::Yes);
  EXPECT_EQ(conjugate_vf(*same.witness, a.h), a.h);

  Genus0Pair b = genus0_pair(vpow(5) / QFunc(16)).genus0();
  auto scaled = pair_equivalent_genus0(a, b);
  ASSERT_EQ(scaled.verdict, Verdict::Yes);
  EXPECT_EQ(conjugate_vf(*scaled.witness, a.h), b.h);
  EXPECT_EQ(*scaled.witness, Moebius<Rat>(Rat(2), Rat(0), Rat(0), Rat(1)));

  EXPECT_EQ(pair_equivalent_genus0(a, genus0_pair(vpow(3)).genus0()).verdict, Verdict::CertifiedNo);
}

TEST(PairEquivalence, TwoPointSupport) {
  // v d/dv and -v d/dv are swapped by y = 1/u; 2 v d/dv is not conjugate.
  Genus0Pair lin = genus0_pair(v).genus0();
  auto inv = pair_equivalent_genus0(lin, genus0_pair(-v).genus0());
  ASSERT_EQ(inv.verdict, Verdict::Yes);
  EXPECT_EQ(conjugate_vf(*inv.witness, v), -v);
  EXPECT_EQ(pair_equivalent_genus0(lin, genus0_pair(QFunc(2) * v).genus0()).verdict, Verdict::CertifiedNo);
  // v^3 vs 2 v^3 needs lambda^2 = 1/2.
  EXPECT_EQ(pair_equivalent_genus0(genus0_pair(vpow(3)).genus0(), genus0_pair(QFunc(2) * vpow(3)).genus0()).verdict,
            Verdict::NotFoundOverQ);
  // Constant fields: one support point.
  auto tr = pair_equivalent_genus0(genus0_pair(QFunc(1)).genus0(), genus0_pair(QFunc(5)).genus0());
  ASSERT_EQ(tr.verdict, Verdict::Yes);
  EXPECT_EQ(conjugate_vf(*tr.witness, QFunc(1)), QFunc(5));
}

TEST(PairEquivalence, RandomConjugatesAndSerialAgreement) {
  Random rnd(55);
  int positives = 0;
  for (int it = 0; it < 40; ++it) {
    QFunc h1 = random_split_field(rnd);
    Moebius<Rat> m = random_qmoebius(rnd);
    QFunc h2 = it % 4 == 3 ? h1 * QFunc(Rat(3)) : conjugate_vf(m, h1);
    Genus0Pair p1 = genus0_pair(h1).genus0(), p2 = genus0_pair(h2).genus0();
    auto par = pair_equivalent_genus0(p1, p2);
    auto ser = pair_equivalent_genus0_serial(p1, p2);
    EXPECT_EQ(par.verdict, ser.verdict);
    EXPECT_EQ(par.witness, ser.witness);
    if (it % 4 != 3) {
      EXPECT_NE(par.verdict, Verdict::CertifiedNo) << str(h1, "v");
    }
    if (par.witness) {
      ++positives;
      EXPECT_EQ(conjugate_vf(*par.witness, h1), h2);
    }
  }
  EXPECT_GE(positives, 20);
}

TEST(AlgebraicSolution, Genus0) {
  auto t5 = algebraic_solution_genus0(genus0_pair(vpow(5)).genus0());
  ASSERT_TRUE(t5.has_value());
  EXPECT_EQ(*t5, QFunc(Rat(-1, 4)) / vpow(4));
  EXPECT_FALSE(algebraic_solution_genus0(genus0_pair(v).genus0()).has_value());
  auto t2 = algebraic_solution_genus0(genus0_pair(vpow(2)).genus0());
  ASSERT_TRUE(t2.has_value());
  EXPECT_EQ(*t2, -QFunc(1) / v);
  Random rnd(56);
  for (int it = 0; it < 40; ++it) {
    QFunc h = random_split_field(rnd);
    auto t = algebraic_solution_genus0(genus0_pair(h).genus0());
    if (t) {
      EXPECT_EQ(h * t->derivative(), QFunc(1));
    } else {
      EXPECT_FALSE(hermite_reduce(QFunc(1) / h).remainder.is_zero());
    }
  }
}

TEST(AlgebraicSolution, Hyperelliptic) {
  const UPoly P = up({-1, 0, 0, 0, 0, 0, 1});
  HyperCurve<Rat> c(P);
  // D(x) = 1.
  HyperPair unit = hyper_pair(P, c.constant(QFunc(1))).hyper();
  HyperSolution s1 = algebraic_solution_hyper(unit);
  ASSERT_TRUE(s1.t.has_value());
  EXPECT_EQ(*s1.t, c.x());
  EXPECT_EQ(unit.dy, (HyperElemQ{QFunc(), QFunc(up({0, 0, 0, 0, 0, 3})) / QFunc(P)}));
  // D(x) = y: dx / y is holomorphic, so no t.
  EXPECT_FALSE(algebraic_solution_hyper(hyper_pair(P, c.y()).hyper()).t.has_value());
  // D(x) = 2 x y.
  EXPECT_FALSE(algebraic_solution_hyper(hyper_pair(P, c.scale(c.y(), QFunc(2) * v)).hyper()).t.has_value());
  // D(y) = 1, i.e. D(x) = 2y / P'.
  HyperPair ypair = hyper_pair(P, c.scale(c.y(), QFunc(2) / QFunc(P.derivative()))).hyper();
  EXPECT_EQ(ypair.dy, c.constant(QFunc(1)));
  HyperSolution s2 = algebraic_solution_hyper(ypair);
  ASSERT_TRUE(s2.t.has_value());
  EXPECT_EQ(c.derive(*s2.t, ypair.dx), c.constant(QFunc(1)));
  // D(t) = 1 for t = x^2 y + 1/x.
  HyperElemQ t = c.add(c.mul(c.constant(v * v), c.y()), c.constant(QFunc(1) / v));
  HyperElemQ dt = c.derive(t, c.constant(QFunc(1)));
  HyperPair tpair = hyper_pair(P, *c.inverse(dt)).hyper();
  HyperSolution s3 = algebraic_solution_hyper(tpair);
  ASSERT_TRUE(s3.t.has_value());
  EXPECT_EQ(c.derive(*s3.t, tpair.dx), c.constant(QFunc(1)));
}

TEST(InfinitesimalAutomorphisms, Examples) {
  const BiRat u = BiRat::var();
  const BiRat zb(z_var());
  const BiRat g2 = u * u;
  auto a2 = infinitesimal_automorphisms(g2, 4);
  for (const auto& h : a2) EXPECT_TRUE(is_automorphism(g2, h));
  EXPECT_TRUE(in_span(a2, g2, BiRat(g2.den())));

  auto a1 = infinitesimal_automorphisms(BiRat(1), 2);
  EXPECT_TRUE(in_span(a1, BiRat(1), BiRat(1)));

  // u' = u + z commutes with h = u + z + 1.
  const BiRat lin = u + zb;
  auto al = infinitesimal_automorphisms(lin, 3);
  for (const auto& h : al) EXPECT_TRUE(is_automorphism(lin, h));
  EXPECT_TRUE(is_automorphism(lin, u + zb + BiRat(1)));
  EXPECT_TRUE(in_span(al, u + zb + BiRat(1), BiRat(1)));

  // u' = z u + 1: no polynomial solutions.
  EXPECT_TRUE(infinitesimal_automorphisms(zb * u + BiRat(1), 3).empty());
}
