#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "odeq/equivalence.hpp"
#include "odeq/linalg.hpp"
#include "odeq/parser.hpp"
#include "test_util.hpp"

using namespace odeq;
using namespace odeq::testing;

namespace {

using QPoint = ProjPoint<Rat>;
using ZPoint = ProjPoint<RatFunc>;

std::string product(const std::vector<std::string>& roots) {
  std::string out;
  for (const auto& r : roots) out += (out.empty() ? "" : "*") + std::string("(T - (") + r + "))";
  return out;
}

std::string standard_text() { return "S^2 - " + product({"1", "2", "3", "4", "5", "6"}); }

// Projective coordinates (x0 : x1).
std::array<Rat, 2> coords(const QPoint& p) {
  if (p.is_infinity()) return {Rat(1), Rat(0)};
  return {p.value(), Rat(1)};
}

bool same_point(const std::array<Rat, 2>& u, const QPoint& p) {
  const auto v = coords(p);
  return u[0] * v[1] == u[1] * v[0];
}

// Every constant Moebius map with A(R1) = R2, by solving for all pairs of
// ordered triples independently of the library's normalizers.
std::vector<Moebius<Rat>> brute_force(const RootSet<Rat>& R1, const RootSet<Rat>& R2) {
  std::vector<Moebius<Rat>> out;
  const size_t n = R1.size();
  if (R2.size() != n) return out;
  std::vector<std::array<size_t, 3>> triples;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (i != j && j != k && i != k) triples.push_back({i, j, k});
  for (const auto& s : triples) {
    for (const auto& t : triples) {
      // a x0 y1 + b x1 y1 - c x0 y0 - d x1 y0 = 0 for each pair.
      Matrix<Rat> m = zero_matrix<Rat>(3, 4);
      for (size_t r = 0; r < 3; ++r) {
        const auto x = coords(R1[s[r]]), y = coords(R2[t[r]]);
        m[r] = {x[0] * y[1], x[1] * y[1], -x[0] * y[0], -x[1] * y[0]};
      }
      auto ns = nullspace(m, 4);
      if (ns.size() != 1) continue;
      const auto& v = ns[0];
      if ((v[0] * v[3] - v[1] * v[2]).is_zero()) continue;
      bool ok = true;
      for (const auto& p : R1) {
        const auto x = coords(p);
        const std::array<Rat, 2> img{v[0] * x[0] + v[1] * x[1], v[2] * x[0] + v[3] * x[1]};
        ok = ok && std::any_of(R2.begin(), R2.end(), [&](const QPoint& q) { return same_point(img, q); });
      }
      if (!ok) continue;
      Moebius<Rat> A(v[0], v[1], v[2], v[3]);
      if (std::find(out.begin(), out.end(), A) == out.end()) out.push_back(A);
    }
  }
  return out;
}

bool same_set(std::vector<Moebius<Rat>> a, std::vector<Moebius<Rat>> b) {
  if (a.size() != b.size()) return false;
  for (const auto& m : a)
    if (std::find(b.begin(), b.end(), m) == b.end()) return false;
  return true;
}

RootSet<Rat> qset(std::initializer_list<long> values, bool with_infinity = false) {
  RootSet<Rat> out;
  for (long v : values) out.emplace_back(Rat(v));
  if (with_infinity) out.push_back(QPoint::infinity());
  return out;
}

Moebius<Rat> random_qmoebius(Random& rnd) {
  for (;;) {
    Rat a = rnd.rational(3), b = rnd.rational(3), c = rnd.rational(3), d = rnd.rational(3);
    if (!(a * d - b * c).is_zero()) return Moebius<Rat>(a, b, c, d);
  }
}

Moebius<RatFunc> random_zmoebius(Random& rnd) {
  for (;;) {
    RatFunc a = rnd.ratfunc(1), b = rnd.ratfunc(1), c = rnd.ratfunc(1), d = rnd.ratfunc(1);
    if (!(a * d - b * c).is_zero()) return Moebius<RatFunc>(a, b, c, d);
  }
}

ZPoint zpoint(const RatFunc& r) { return ZPoint(r); }

}  // namespace

TEST(CrossRatio, Conventions) {
  const ZPoint zero(RatFunc(0)), one(RatFunc(1)), inf = ZPoint::infinity();
  const RatFunc lam = rf({2, 1}, {1, 0, 3});
  EXPECT_EQ(cross_ratio(zero, one, inf, zpoint(lam)), zpoint(lam));
  EXPECT_TRUE(cross_ratio(zero, one, inf, inf).is_infinity());
  const RatFunc z = z_var();
  EXPECT_EQ(cross_ratio(zpoint(z), zpoint(RatFunc(2) * z), zpoint(RatFunc(3) * z), zpoint(RatFunc(4) * z)),
            cross_ratio(zpoint(RatFunc(1)), zpoint(RatFunc(2)), zpoint(RatFunc(3)), zpoint(RatFunc(4))));
  EXPECT_THROW(cross_ratio(zero, zero, inf, one), Error);
}

TEST(CrossRatio, MatchesClassicalFormula) {
  Random rnd(61);
  for (int it = 0; it < 50; ++it) {
    RatFunc p = rnd.ratfunc(1), q = rnd.ratfunc(1), r = rnd.ratfunc(1), s = rnd.ratfunc(1);
    if (p == q || q == r || p == r || s == r) continue;
    // (s - p)(q - r) / ((s - r)(q - p)).
    EXPECT_EQ(cross_ratio(zpoint(p), zpoint(q), zpoint(r), zpoint(s)), zpoint((s - p) * (q - r) / ((s - r) * (q - p))));
  }
}

TEST(CrossRatio, InvariantUnderMoebius) {
  Random rnd(62);
  for (int it = 0; it < 40; ++it) {
    std::vector<ZPoint> pts;
    for (int k = 0; k < 4; ++k) pts.push_back(k == 3 && it % 5 == 0 ? ZPoint::infinity() : zpoint(rnd.ratfunc(1)));
    if (pts[0] == pts[1] || pts[1] == pts[2] || pts[0] == pts[2]) continue;
    const Moebius<RatFunc> m = random_zmoebius(rnd);
    EXPECT_EQ(cross_ratio(m(pts[0]), m(pts[1]), m(pts[2]), m(pts[3])), cross_ratio(pts[0], pts[1], pts[2], pts[3]));
  }
}

TEST(SemiAutonomous, Examples) {
  const RatFunc z = z_var();
  RootSet<RatFunc> scaled, mixed;
  for (int j = 1; j <= 6; ++j) scaled.push_back(zpoint(RatFunc(j) * z));
  for (int j = 1; j <= 5; ++j) mixed.push_back(zpoint(RatFunc(j)));
  mixed.push_back(zpoint(z));
  auto A = semi_autonomous_test(scaled);
  ASSERT_TRUE(A.has_value());
  for (const auto& p : scaled) {
    const ZPoint img = (*A)(p);
    EXPECT_TRUE(img.is_infinity() || img.value().is_constant());
  }
  EXPECT_FALSE(semi_autonomous_test(mixed).has_value());
  EXPECT_FALSE(cross_ratio(mixed[0], mixed[1], mixed[2], mixed[5]).value().is_constant());

  RootSet<RatFunc> standard{zpoint(RatFunc(0)), zpoint(RatFunc(1)), ZPoint::infinity(), zpoint(RatFunc(5)),
                            zpoint(rf({-2}))};
  auto id = semi_autonomous_test(standard);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(*id, Moebius<RatFunc>());
}

TEST(SemiAutonomous, PermutationInvariant) {
  Random rnd(63);
  const RatFunc z = z_var();
  const std::vector<std::pair<RootSet<RatFunc>, bool>> fixtures = {
      {{zpoint(z), zpoint(RatFunc(2) * z), zpoint(RatFunc(3) * z), zpoint(RatFunc(4) * z), zpoint(RatFunc(5) * z),
        zpoint(RatFunc(6) * z)},
       true},
      {{zpoint(RatFunc(1)), zpoint(RatFunc(2)), zpoint(RatFunc(3)), zpoint(RatFunc(4)), zpoint(RatFunc(5)), zpoint(z)},
       false},
      {{zpoint(z + RatFunc(1)), zpoint(z - RatFunc(1)), ZPoint::infinity(), zpoint(z), zpoint(z + RatFunc(3))}, true},
      {{zpoint(z * z), zpoint(RatFunc(0)), zpoint(RatFunc(1)), ZPoint::infinity(), zpoint(z)}, false},
  };
  for (const auto& [R, expected] : fixtures) {
    RootSet<RatFunc> perm = R;
    for (int it = 0; it < 20; ++it) {
      std::shuffle(perm.begin(), perm.end(), rnd.engine());
      EXPECT_EQ(semi_autonomous_test(perm).has_value(), expected);
    }
  }
}

TEST(Transporter, Examples) {
  const RootSet<Rat> tri = qset({0, 1}, true);
  EXPECT_EQ(transporter(tri, tri).maps.size(), 6u);
  const RootSet<Rat> harmonic = qset({0, 1, -1}, true);
  EXPECT_EQ(brute_force(harmonic, harmonic).size(), 8u);
  EXPECT_TRUE(same_set(transporter(harmonic, harmonic).maps, brute_force(harmonic, harmonic)));
  EXPECT_TRUE(transporter(qset({0, 1, 2}, true), qset({0, 1, 7}, true)).maps.empty());
  EXPECT_TRUE(brute_force(qset({0, 1, 2}, true), qset({0, 1, 7}, true)).empty());
  EXPECT_THROW(transporter(qset({0, 1}), qset({0, 1})), Error);
}

TEST(Transporter, StabilizerIsAGroup) {
  for (const RootSet<Rat>& R : {qset({0, 1, -1}, true), qset({1, 2, 3, 4, 5, 6}), qset({0, 1, 2, -1}, true)}) {
    const auto maps = transporter(R, R).maps;
    ASSERT_FALSE(maps.empty());
    EXPECT_NE(std::find(maps.begin(), maps.end(), Moebius<Rat>()), maps.end());
    for (const auto& a : maps) {
      EXPECT_NE(std::find(maps.begin(), maps.end(), a.inverse()), maps.end());
      for (const auto& b : maps) EXPECT_NE(std::find(maps.begin(), maps.end(), a.compose(b)), maps.end());
    }
  }
}

TEST(Transporter, MatchesBruteForceOnRandomSets) {
  Random rnd(64);
  const RootSet<Rat> pool{QPoint::infinity(), QPoint(Rat(0)), QPoint(Rat(1)), QPoint(Rat(-1)),
                          QPoint(Rat(2)),     QPoint(Rat(-2)), QPoint(Rat(1, 2)), QPoint(Rat(3)),
                          QPoint(Rat(-1, 3)), QPoint(Rat(1, 3)), QPoint(Rat(5)), QPoint(Rat(4))};
  int nonempty = 0;
  for (int it = 0; it < 50; ++it) {
    const size_t n = static_cast<size_t>(rnd.integer(3, 6));
    RootSet<Rat> shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rnd.engine());
    const RootSet<Rat> R1(shuffled.begin(), shuffled.begin() + static_cast<long>(n));
    RootSet<Rat> R2;
    if (it % 2 == 0) {
      const Moebius<Rat> m = random_qmoebius(rnd);
      for (const auto& p : R1) R2.push_back(m(p));
    } else {
      std::shuffle(shuffled.begin(), shuffled.end(), rnd.engine());
      R2.assign(shuffled.begin(), shuffled.begin() + static_cast<long>(n));
    }
    std::shuffle(R2.begin(), R2.end(), rnd.engine());
    const auto par = transporter(R1, R2);
    const auto ser = transporter_serial(R1, R2);
    EXPECT_EQ(par.maps, ser.maps);
    EXPECT_TRUE(same_set(par.maps, brute_force(R1, R2)));
    nonempty += par.maps.empty() ? 0 : 1;
  }
  EXPECT_GE(nonempty, 25);
}

TEST(Transporter, CandidateCap) {
  const RootSet<Rat> R = qset({1, 2, 3, 4, 5, 6});
  const auto full = transporter(R, R);
  EXPECT_EQ(full.candidates, 120u);
  EXPECT_FALSE(full.truncated);
  const auto capped = transporter(R, R, 10);
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(capped.candidates, 10u);
}

TEST(FieldIso, Lifts) {
  const HyperModel std_model = hyperelliptic_model(parse_equation(standard_text()));
  auto id = lift_to_field_iso(Moebius<RatFunc>(), std_model, std_model);
  ASSERT_EQ(id.size(), 2u);
  EXPECT_EQ(id[0].lambda_sq, RatFunc(1));
  EXPECT_FALSE(id[0].requires_sqrt);
  EXPECT_EQ(*id[0].lambda(), RatFunc(1));
  EXPECT_EQ(*id[1].lambda(), RatFunc(-1));

  // y^2 = prod (x - j z) and x = z x~: P(z x~) = z^6 prod (x~ - j).
  const HyperModel scaled =
      hyperelliptic_model(parse_equation("S^2 - " + product({"z", "2*z", "3*z", "4*z", "5*z", "6*z"})));
  RFPoly expected(RatFunc(1));
  for (int j = 1; j <= 6; ++j) expected = expected * RFPoly({-RatFunc(j) * z_var(), RatFunc(1)});
  EXPECT_EQ(scaled.P, expected);
  const Moebius<RatFunc> xz(z_var(), RatFunc(0), RatFunc(0), RatFunc(1));
  // lambda^2 depends on the matrix scale; lambda^2 / det^(g+1) does not.
  // For the matrix (z, 0, 0, 1) it is z^6 / z^3.
  const FieldIso zl = lift_to_field_iso(xz, scaled, std_model)[0];
  EXPECT_EQ(zl.lambda_sq / xz.det().pow(3), z_var().pow(3));

  // Same roots, different leading coefficient: a constant lambda^2 != 1.
  const HyperModel doubled = hyperelliptic_model(parse_equation("S^2 - 2*" + product({"1", "2", "3", "4", "5", "6"})));
  const FieldIso lift = lift_to_field_iso(Moebius<RatFunc>(), doubled, std_model)[0];
  EXPECT_TRUE(lift.lambda_sq.is_constant());
  EXPECT_NE(lift.lambda_sq, RatFunc(1));
  EXPECT_EQ(std_model.P.scaled(lift.lambda_sq), doubled.P);
  EXPECT_EQ(lift.requires_sqrt, !exact_sqrt(lift.lambda_sq).has_value());

  EXPECT_THROW(lift_to_field_iso(xz, std_model, std_model), Error);
}

TEST(StrictEquivalence, DisguiseRoundTrip) {
  const DiffEq standard = parse_equation(standard_text());
  const Disguise d = disguise(standard, DisguiseMode::ScaleT, RatFunc(1) / z_var());
  const HyperModel M1 = hyperelliptic_model(standard), M2 = hyperelliptic_model(d.equation);
  const EquivResult r = strict_equiv_hyper(M1, M2);
  ASSERT_EQ(r.verdict, Verdict::Yes) << r.reason;
  const IsoCheck check = check_field_iso(*r.witness, M1, M2);
  EXPECT_TRUE(check.curve_identity);
  EXPECT_TRUE(check.derivation);
  EXPECT_TRUE(check.residual.is_zero());
  // The witness sends x2 to a root-preserving map x1 = A(x2) with A(j/z) = j.
  for (int j = 1; j <= 6; ++j)
    EXPECT_EQ(r.witness->moebius(zpoint(RatFunc(j) / z_var())), zpoint(RatFunc(j)));
  // Reverse direction and reflexivity.
  EXPECT_EQ(strict_equiv_hyper(M2, M1).verdict, Verdict::Yes);
  EXPECT_EQ(strict_equiv_hyper(M1, M1).verdict, Verdict::Yes);
  EXPECT_EQ(strict_equiv_hyper(M2, M2).verdict, Verdict::Yes);
}

TEST(StrictEquivalence, RandomDisguisesRecheck) {
  Random rnd(65);
  for (const std::string& text : {standard_text(), std::string("S^2 - T^5 + T"), std::string("S^2 - (T^6 - 1)")}) {
    const DiffEq base = parse_equation(text);
    for (int it = 0; it < 3; ++it) {
      const Disguise d = disguise(base, DisguiseMode::ScaleT, rnd.nonzero_ratfunc(1));
      const HyperModel M1 = hyperelliptic_model(base), M2 = hyperelliptic_model(d.equation);
      if (!M1.roots || !M2.roots) {
        EXPECT_EQ(strict_equiv_hyper(M1, M2).verdict, Verdict::Unsupported);
        continue;
      }
      const EquivResult r = strict_equiv_hyper(M1, M2);
      ASSERT_EQ(r.verdict, Verdict::Yes) << text;
      const IsoCheck check = check_field_iso(*r.witness, M1, M2);
      EXPECT_TRUE(check.curve_identity && check.derivation) << text;
      EXPECT_EQ(strict_equiv_hyper(M2, M1).verdict, Verdict::Yes);
      EXPECT_EQ(strict_equiv_hyper(M1, M2, {0, false}).witness->moebius, r.witness->moebius);
    }
  }
}

TEST(StrictEquivalence, Obstructions) {
  const DiffEq standard = parse_equation(standard_text());
  const DiffEq moved = parse_equation("S^2 - " + product({"1", "2", "3", "4", "5", "7"}));
  const EquivResult none = strict_equiv_hyper(standard, moved);
  EXPECT_EQ(none.verdict, Verdict::CertifiedNo);
  EXPECT_EQ(none.transporter_size, 0u);
  EXPECT_EQ(strict_equiv_hyper(moved, standard).verdict, Verdict::CertifiedNo);
  // Capped search cannot certify.
  const EquivResult capped = strict_equiv_hyper(standard, moved, {5, true});
  EXPECT_EQ(capped.verdict, Verdict::NotFoundOverQ);
  EXPECT_TRUE(capped.truncated);

  // Same branch set, derivation twice as fast: the stabilizer {x, 7 - x} is
  // nonempty but no lift conjugates y into 2y.
  const DiffEq fast = parse_equation("S^2 - 4*" + product({"1", "2", "3", "4", "5", "6"}));
  const EquivResult slow_fast = strict_equiv_hyper(standard, fast);
  EXPECT_EQ(slow_fast.verdict, Verdict::CertifiedNo);
  EXPECT_EQ(slow_fast.transporter_size, 2u);
  EXPECT_EQ(strict_equiv_hyper(fast, standard).verdict, Verdict::CertifiedNo);

  const DiffEq genus3 = parse_equation("S^2 - (T^8 - 1)");
  EXPECT_EQ(strict_equiv_hyper(standard, genus3).verdict, Verdict::CertifiedNo);
  EXPECT_EQ(strict_equiv_hyper(parse_equation("S^2 - (T^6 - 1)"), parse_equation("S^2 - (T^6 - 2)")).verdict,
            Verdict::Unsupported);
}

TEST(AutonomousTest, Examples) {
  const DiffEq standard = parse_equation(standard_text());
  const AutonomyResult plain = autonomous_test_hyper(standard);
  ASSERT_EQ(plain.verdict, Verdict::Yes);

  const Disguise d = disguise(standard, DisguiseMode::ScaleT, RatFunc(1) / z_var());
  const AutonomyResult r = autonomous_test_hyper(d.equation);
  ASSERT_EQ(r.verdict, Verdict::Yes) << r.reason;
  ASSERT_TRUE(r.pair.has_value());
  // The normalized pair is the standard one up to a constant Moebius map.
  const DiffEq normalized = make_autonomous(*r.pair, r.pair->curve().x());
  EXPECT_TRUE(normalized.is_autonomous());
  EXPECT_EQ(strict_equiv_hyper(normalized, standard).verdict, Verdict::Yes);

  // y' = w + z y with w^2 = prod (y - j): semi-autonomous, not autonomous.
  const DiffEq drift = parse_equation("(S - z*T)^2 - " + product({"1", "2", "3", "4", "5", "6"}));
  const HyperModel dm = hyperelliptic_model(drift);
  ASSERT_TRUE(dm.roots.has_value());
  EXPECT_TRUE(semi_autonomous_test(*dm.roots).has_value());
  EXPECT_EQ(autonomous_test_hyper(drift).verdict, Verdict::CertifiedNo);

  const DiffEq moving = parse_equation("S^2 - " + product({"1", "2", "3", "4", "5", "z"}));
  const AutonomyResult mr = autonomous_test_hyper(moving);
  EXPECT_EQ(mr.verdict, Verdict::CertifiedNo);
  EXPECT_FALSE(mr.normalizer.has_value());
}

TEST(Elliptic, NecessaryConditions) {
  const DiffEq j0 = parse_equation("S^2 - (T^3 + 1)"), j1728 = parse_equation("S^2 - (T^3 + T)");
  EXPECT_EQ(elliptic_necessary(j0, j1728).result, Necessary::ObstructionFound);
  EXPECT_EQ(elliptic_necessary(j0, j0).result, Necessary::Inconclusive);
  EXPECT_EQ(elliptic_necessary(parse_equation("S^2 - (T^3 + z*T)"), j1728).result, Necessary::Inconclusive);

  EXPECT_EQ(elliptic_semi_autonomous_necessary(parse_equation("S^2 - (T^3 + z*T)")).result, Necessary::Inconclusive);
  const EllipticCheck moving = elliptic_semi_autonomous_necessary(parse_equation("S^2 - (T^3 + z*T + 1)"));
  EXPECT_EQ(moving.result, Necessary::ObstructionFound);
  const RatFunc z = z_var();
  EXPECT_EQ(moving.j1, RatFunc(1728) * RatFunc(4) * z.pow(3) / (RatFunc(4) * z.pow(3) + RatFunc(27)));
  EXPECT_EQ(elliptic_semi_autonomous_necessary(j0).result, Necessary::Inconclusive);
}
