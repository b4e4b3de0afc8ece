#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "odeq/factor.hpp"
#include "odeq/integrate.hpp"
#include "odeq/resultant.hpp"
#include "odeq/roots.hpp"
#include "test_util.hpp"

using namespace odeq;
using namespace odeq::testing;

namespace {

const RatFunc Z = z_var();
const RFPoly X = RFPoly::var();

RFPoly lin(const RatFunc& root) { return X - RFPoly(root); }

bool divides(const UPoly& d, const UPoly& p) { return divmod(p, d).second.is_zero(); }

// Rational-root-theorem candidates of an integer polynomial, by brute force.
std::vector<Rat> candidate_rational_roots(const UPoly& p) {
  UPoly q = primitive_integer_part(p);
  auto divisors = [](Int n) {
    std::vector<Int> out;
    n = abs(n);
    for (Int d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        out.push_back(n / d);
      }
    }
    return out;
  };
  std::vector<Rat> out{Rat(0)};
  if (q.coeff(0).is_zero()) return out;
  for (const Int& a : divisors(q.coeff(0).num()))
    for (const Int& b : divisors(q.lc().num())) {
      out.push_back(Rat(a, b));
      out.push_back(-Rat(a, b));
    }
  return out;
}

// Residue of r at the rational point b of multiplicity m in the denominator:
// the (m-1)-th Taylor coefficient of (v - b)^m r at b.
Rat residue_at(const RatFunc& r, const Rat& b, int m) {
  RatFunc s = r * RatFunc(UPoly(std::vector<Rat>{-b, Rat(1)}).pow(static_cast<unsigned>(m)));
  Rat fact(1);
  for (int i = 1; i < m; ++i) {
    s = s.derivative();
    fact *= Rat(i);
  }
  return *s.eval(b) / fact;
}

}  // namespace

// ------------------------------------------------------------------- gcd

TEST(GcdPoly, Examples) {
  EXPECT_EQ(gcd(up({-1, 0, 1}), up({-1, 1})), up({-1, 1}));
  EXPECT_EQ(gcd(up({0, 0, 0, 1}), up({0, 0, 1})), up({0, 0, 1}));
  EXPECT_EQ(gcd(up({1, 0, 1}), up({-1, 0, 1})), up({1}));
  EXPECT_TRUE(gcd(UPoly(), UPoly()).is_zero());
}

TEST(GcdPoly, RandomCommonDivisors) {
  Random rnd(11);
  for (int it = 0; it < 200; ++it) {
    UPoly c = rnd.nonzero_poly(3);
    UPoly a = c * rnd.nonzero_poly(5);
    UPoly b = c * rnd.nonzero_poly(5);
    UPoly g = gcd(a, b);
    ASSERT_TRUE(divides(g, a));
    ASSERT_TRUE(divides(g, b));
    ASSERT_TRUE(divides(c, g));
    ASSERT_EQ(g.lc(), Rat(1));
  }
}

// ------------------------------------------------------------ resultants

TEST(Resultant, Examples) {
  EXPECT_EQ(resultant(X * X - RFPoly(Z), X - RFPoly(1)), RatFunc(1) - Z);
  EXPECT_EQ(resultant(X - RFPoly(3), X - RFPoly(5)), RatFunc(-2));
  EXPECT_TRUE(is_zero(resultant(X * X - RFPoly(Z), X * X - RFPoly(Z))));
}

TEST(Resultant, SylvesterDeterminantAgrees) {
  Random rnd(12);
  for (int it = 0; it < 60; ++it) {
    std::vector<RatFunc> a, b;
    int da = static_cast<int>(rnd.integer(1, 4)), db = static_cast<int>(rnd.integer(1, 4));
    for (int i = 0; i <= da; ++i) a.push_back(rnd.ratfunc(1));
    for (int i = 0; i <= db; ++i) b.push_back(rnd.ratfunc(1));
    RFPoly pa(a), pb(b);
    if (pa.degree() < 1 || pb.degree() < 1) continue;
    EXPECT_EQ(resultant(pa, pb), resultant_domain(pa, pb));
  }
}

TEST(Resultant, ZeroIffCommonFactor) {
  Random rnd(13);
  for (int it = 0; it < 100; ++it) {
    UPoly a = rnd.nonzero_poly(4), b = rnd.nonzero_poly(4);
    if (it % 2 == 0) {
      UPoly c = rnd.nonzero_poly(2);
      a = a * c;
      b = b * c;
    }
    if (a.degree() < 1 || b.degree() < 1) continue;
    EXPECT_EQ(resultant(a, b).is_zero(), gcd(a, b).degree() > 0);
  }
}

// ---------------------------------------------------------- factorization

TEST(Factor, Examples) {
  Factorization f1 = factor_univariate_rationals(up({-1, 0, 1}));
  ASSERT_EQ(f1.factors.size(), 2u);
  EXPECT_EQ(f1.factors[0].first, up({-1, 1}));
  EXPECT_EQ(f1.factors[1].first, up({1, 1}));

  Factorization f2 = factor_univariate_rationals(up({1, 0, 1}));
  ASSERT_EQ(f2.factors.size(), 1u);
  EXPECT_EQ(f2.factors[0].first, up({1, 0, 1}));

  UPoly x6 = up({-1, 0, 0, 0, 0, 0, 1});
  Factorization f3 = factor_univariate_rationals(x6);
  EXPECT_EQ(f3.expand(), x6);
  std::set<std::vector<long>> got;
  for (const auto& [f, m] : f3.factors) {
    EXPECT_EQ(m, 1);
    std::vector<long> c;
    for (const auto& x : f.coeffs()) c.push_back(x.num().get_si());
    got.insert(c);
  }
  std::set<std::vector<long>> want{{-1, 1}, {1, 1}, {1, 1, 1}, {1, -1, 1}};
  EXPECT_EQ(got, want);
}

TEST(Factor, ManyModularFactorsButIrreducible) {
  // x^4 - 10x^2 + 1 splits modulo every prime.
  EXPECT_TRUE(is_irreducible(up({1, 0, -10, 0, 1})));
  UPoly p = up({1, 0, -10, 0, 1}) * up({-2, 0, 1});
  EXPECT_EQ(factor_univariate_rationals(p).factors.size(), 2u);
}

TEST(Factor, KnownIrreducibleProducts) {
  const std::vector<UPoly> pool{up({1, 0, 1}),     up({-2, 0, 1}),  up({-1, -1, 0, 1}),
                                up({-3, 1}),       up({5, 2}),      up({1, 1, 1}),
                                up({2, 0, 0, 0, 1}), up({-7, 0, 3})};
  Random rnd(14);
  for (int it = 0; it < 40; ++it) {
    UPoly p(Rat(rnd.nonzero_rational()));
    std::multiset<size_t> chosen;
    int k = static_cast<int>(rnd.integer(1, 4));
    for (int i = 0; i < k; ++i) {
      size_t j = static_cast<size_t>(rnd.integer(0, static_cast<long>(pool.size()) - 1));
      chosen.insert(j);
      p = p * pool[j];
    }
    Factorization f = factor_univariate_rationals(p);
    ASSERT_EQ(f.expand(), p);
    size_t total = 0;
    for (const auto& [g, m] : f.factors) total += static_cast<size_t>(m);
    EXPECT_EQ(total, chosen.size());
  }
}

TEST(Factor, RandomMultiplyBackAndNoRationalRoots) {
  Random rnd(15);
  for (int it = 0; it < 60; ++it) {
    UPoly p = rnd.nonzero_poly(3) * rnd.nonzero_poly(3) * rnd.nonzero_poly(2);
    if (p.degree() < 1) continue;
    Factorization f = factor_univariate_rationals(p);
    ASSERT_EQ(f.expand(), p);
    for (const auto& [g, m] : f.factors) {
      if (g.degree() < 2) continue;
      for (const Rat& c : candidate_rational_roots(g)) EXPECT_FALSE(g.eval(c).is_zero());
    }
  }
}

// ------------------------------------------------- rational function roots

TEST(RationalFunctionRoots, Examples) {
  RFPoly p = lin(Z) * lin(Z * RatFunc(2)) * lin(Z * RatFunc(3));
  auto r1 = rational_function_roots(p);
  std::vector<RatFunc> want{Z, Z * RatFunc(2), Z * RatFunc(3)};
  std::sort(want.begin(), want.end(),
            [](const RatFunc& a, const RatFunc& b) { return canonical_cmp(a, b) < 0; });
  EXPECT_EQ(r1, want);

  EXPECT_TRUE(rational_function_roots(X * X - RFPoly(Z)).empty());

  RFPoly q = RFPoly(Z) * X * X - RFPoly(Z * Z + Z) * X + RFPoly(Z * Z);
  auto r3 = rational_function_roots(q);
  ASSERT_EQ(r3.size(), 2u);
  EXPECT_EQ(r3[0], RatFunc(1));
  EXPECT_EQ(r3[1], Z);
}

TEST(RationalFunctionRoots, RandomProducts) {
  Random rnd(16);
  for (int it = 0; it < 12; ++it) {
    std::vector<RatFunc> rs;
    RFPoly p(RatFunc(rnd.nonzero_ratfunc(1)));
    int n = static_cast<int>(rnd.integer(1, 3));
    for (int i = 0; i < n; ++i) {
      RatFunc r(rnd.poly(3, 3), rnd.nonzero_poly(2, 3));
      rs.push_back(r);
      p = p * lin(r);
    }
    auto got = rational_function_roots(p);
    for (const auto& r : got) EXPECT_TRUE(is_zero(p.eval(r)));
    std::sort(rs.begin(), rs.end(),
              [](const RatFunc& a, const RatFunc& b) { return canonical_cmp(a, b) < 0; });
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    EXPECT_EQ(got, rs);
  }
}

// ------------------------------------------------------------- integration

TEST(Hermite, Examples) {
  using V = RatFunc;  // rational functions in v over Q
  const V v = V::var();
  auto h1 = hermite_reduce(V(1) / v.pow(5));
  EXPECT_EQ(h1.rational_part, V(-1) / (V(4) * v.pow(4)));
  EXPECT_TRUE(h1.remainder.is_zero());

  auto h2 = hermite_reduce(V(2) * v / (v * v + V(1)).pow(2));
  EXPECT_EQ(h2.rational_part, V(-1) / (v * v + V(1)));
  EXPECT_TRUE(h2.remainder.is_zero());

  auto h3 = hermite_reduce(V(1) / v);
  EXPECT_TRUE(h3.rational_part.is_zero());
  EXPECT_EQ(h3.remainder, V(1) / v);
}

TEST(Hermite, RandomIdentity) {
  Random rnd(17);
  for (int it = 0; it < 100; ++it) {
    UPoly den(Rat(1));
    int budget = static_cast<int>(rnd.integer(1, 8));
    while (den.degree() < budget) {
      UPoly f = rnd.nonzero_poly(2);
      if (f.degree() < 1) continue;
      int e = static_cast<int>(rnd.integer(1, 3));
      if (den.degree() + e * f.degree() > 8) break;
      den = den * f.pow(static_cast<unsigned>(e));
    }
    RatFunc r(rnd.poly(9), den);
    auto h = hermite_reduce(r);
    ASSERT_EQ(h.rational_part.derivative() + h.remainder, r);
    EXPECT_TRUE(is_squarefree(h.remainder.den()));
    EXPECT_LT(h.remainder.num().degree(), h.remainder.den().degree());
  }
}

TEST(ResiduesAllZero, Examples) {
  const RatFunc v = RatFunc::var();
  EXPECT_TRUE(residues_all_zero(RatFunc()));
  EXPECT_FALSE(residues_all_zero(RatFunc(1) / v));
  EXPECT_FALSE(residues_all_zero(RatFunc(1) / (v * v - RatFunc(1))));
  EXPECT_EQ(residue_at(RatFunc(1) / (v * v - RatFunc(1)), Rat(1), 1), Rat(1, 2));
}

TEST(ResiduesAllZero, AgreesWithPartialFractions) {
  Random rnd(18);
  int exact_cases = 0;
  for (int it = 0; it < 100; ++it) {
    std::vector<std::pair<Rat, int>> poles;
    UPoly den(Rat(1));
    int k = static_cast<int>(rnd.integer(1, 3));
    for (int i = 0; i < k; ++i) {
      Rat b(Int(rnd.integer(-4, 4)));
      bool dup = false;
      for (auto& [c, m] : poles) dup = dup || c == b;
      if (dup) continue;
      int m = static_cast<int>(rnd.integer(1, 3));
      poles.push_back({b, m});
      den = den * UPoly(std::vector<Rat>{-b, Rat(1)}).pow(static_cast<unsigned>(m));
    }
    RatFunc r;
    if (it % 2 == 0) {
      r = RatFunc(rnd.poly(3), den).derivative();
      ++exact_cases;
    } else {
      r = RatFunc(rnd.poly(6), den);
    }
    bool oracle = true;
    for (const auto& [b, m] : poles) {
      if (r.den().eval(b).is_zero()) {
        int mult = 0;
        UPoly d = r.den();
        while (d.eval(b).is_zero()) {
          d = divmod(d, UPoly(std::vector<Rat>{-b, Rat(1)})).first;
          ++mult;
        }
        if (!residue_at(r, b, mult).is_zero()) oracle = false;
      }
    }
    auto h = hermite_reduce(r);
    EXPECT_EQ(residues_all_zero(h.remainder), oracle);
  }
  EXPECT_GT(exact_cases, 0);
}

TEST(ExactSqrt, Polynomials) {
  UPoly p = up({1, 2, 1});
  ASSERT_TRUE(exact_sqrt(p * Rat(4)).has_value());
  EXPECT_EQ(*exact_sqrt(p * Rat(4)), up({2, 2}));
  EXPECT_FALSE(exact_sqrt(up({0, 1})).has_value());
  EXPECT_FALSE(exact_sqrt(p * Rat(2)).has_value());
  RatFunc f(up({0, 0, 1}), up({1, 2, 1}));
  ASSERT_TRUE(exact_sqrt(f).has_value());
  EXPECT_EQ(exact_sqrt(f)->pow(2), f);
}

TEST(ZeroPolynomial, DegreeIsMinusInfinity) {
  EXPECT_EQ(UPoly().degree(), kMinusInfinity);
  EXPECT_NE(UPoly().degree(), -1);
}
