#include "odeq/autonomous.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "odeq/factor.hpp"
#include "odeq/integrate.hpp"
#include "odeq/linalg.hpp"
#include "odeq/resultant.hpp"

namespace odeq {

namespace {

using QCurve = HyperCurve<Rat>;

// Q[S, T] is represented as RFPoly: polynomials in S whose coefficients are
// rational functions in T (stored in the z slot).
using STPoly = RFPoly;

STPoly st_monomial(const Rat& c, int i, int j) {
  std::vector<RatFunc> coeffs(static_cast<size_t>(i) + 1, RatFunc(0));
  coeffs[i] = RatFunc(UPoly::monomial(c, j));
  return STPoly(std::move(coeffs));
}

struct XTerm {
  QFunc coeff;  // rational function of x
  int s;
  int t;
};

// sum coeff_k(x) S^s T^t, times the lcm of the x-denominators.
Poly<STPoly> cleared_in_x(const std::vector<XTerm>& terms) {
  UPoly l(Rat(1));
  for (const auto& term : terms) l = divmod(l * term.coeff.den(), gcd(l, term.coeff.den())).first;
  std::vector<STPoly> out;
  for (const auto& term : terms) {
    if (term.coeff.is_zero()) continue;
    UPoly n = divmod(term.coeff.num() * l, term.coeff.den()).first;
    if (out.size() < static_cast<size_t>(n.degree()) + 1) out.resize(n.degree() + 1);
    for (int k = 0; k <= n.degree(); ++k)
      if (!n.coeff(k).is_zero()) out[k] = out[k] + st_monomial(n.coeff(k), term.s, term.t);
  }
  return Poly<STPoly>(std::move(out));
}

BiPoly to_bipoly(const STPoly& r) {
  BiPoly f;
  for (int i = 0; i <= r.degree(); ++i) {
    const RatFunc& c = r.coeffs()[i];
    if (c.is_zero()) continue;
    if (c.den().degree() > 0) throw std::logic_error("resultant coefficient is not polynomial");
    const UPoly n = c.num().scaled(Rat(1) / c.den().lc());
    for (int j = 0; j <= n.degree(); ++j)
      if (!n.coeff(j).is_zero()) f += BiPoly::monomial(RatFunc(n.coeff(j)), i, j);
  }
  return f;
}

// Divides out factors depending on only one of S, T.
BiPoly strip_contents(const BiPoly& f) {
  BiPoly r = f;
  for (int pass = 0; pass < 2; ++pass) {
    Poly<RFPoly> view = pass == 0 ? r.as_poly_in_S() : r.as_poly_in_T();
    RFPoly g;
    for (const auto& c : view.coeffs()) g = gcd(g, c);
    if (g.degree() > 0) {
      std::vector<RFPoly> out;
      for (const auto& c : view.coeffs()) out.push_back(divmod(c, g).first);
      Poly<RFPoly> q(std::move(out));
      r = pass == 0 ? BiPoly::from_poly_in_S(q) : BiPoly::from_poly_in_T(q);
    }
  }
  return r.normalized();
}

DiffEq finish_autonomous(const STPoly& res) {
  if (res.is_zero()) throw Error(ErrorKind::NotAGenerator, "vanishing resultant");
  BiPoly G = strip_contents(to_bipoly(res));
  if (G.deg_S() < 1 || G.deg_T() < 1) throw Error(ErrorKind::NotAGenerator, "eliminant lost a variable");
  const Poly<BiRat> over = G.over_T_field();
  if (gcd(over, over.derivative()).degree() > 0)
    throw Error(ErrorKind::NotAGenerator, "(D(g), g) generates a proper subfield");
  return DiffEq::from_bipoly(G);
}

QFunc to_q(const BiRat& f) { return to_rational(f); }
HyperElemQ to_q(const HyperElemZ& e) { return {to_q(e.e0), to_q(e.e1)}; }

QFunc on_param(const HyperElemQ& e, const QFunc& x_of_v, const QFunc& y_of_v) {
  return e.e0.compose(x_of_v) + e.e1.compose(x_of_v) * y_of_v;
}

// Rational parametrization of a genus-0 conic y^2 = P(x), deg P <= 2.
// Affine point on w^2 = P(x) with x of small height.
std::optional<std::pair<Rat, Rat>> conic_point(const UPoly& P) {
  constexpr int height = 40;
  for (int den = 1; den <= height; ++den)
    for (int num = 0; num <= height; ++num)
      for (int sign : {1, -1}) {
        if (num == 0 && sign < 0) continue;
        if (std::gcd(num, den) != 1) continue;
        const Rat x0(sign * num, den);
        if (auto w = exact_sqrt(P.eval(x0))) return std::pair{x0, *w};
      }
  return std::nullopt;
}

PairXD conic_pair(const UPoly& P, const HyperElemQ& dx, const HyperElemQ& y, const HyperElemQ& yp) {
  const QCurve c(P);
  const QFunc v = QFunc::var();
  HyperElemQ v_elem;
  QFunc x_of_v, y_of_v;
  if (P.degree() == 1) {
    v_elem = c.y();
    x_of_v = (v * v - QFunc(P.coeff(0))) / QFunc(P.coeff(1));
    y_of_v = v;
  } else {
    const Rat p2 = P.coeff(2);
    auto roots = rational_roots(P);
    if (!roots.empty()) {
      const Rat r = roots.front();
      const Rat r2 = -P.coeff(1) / p2 - r;
      v_elem = {QFunc(), QFunc(1) / (QFunc::var() - QFunc(r))};
      x_of_v = (v * v * QFunc(r) - QFunc(p2 * r2)) / (v * v - QFunc(p2));
      y_of_v = v * (x_of_v - QFunc(r));
    } else if (auto sq = exact_sqrt(p2)) {
      const Rat cc = *sq;
      v_elem = {-QFunc(cc) * QFunc::var(), QFunc(1)};
      x_of_v = (QFunc(P.coeff(0)) - v * v) / (QFunc(cc * 2) * v - QFunc(P.coeff(1)));
      y_of_v = QFunc(cc) * x_of_v + v;
    } else if (auto pt = conic_point(P)) {
      // Lines of slope v through (x0, w0).
      const auto [x0, w0] = *pt;
      const QFunc X0(x0), W0(w0);
      v_elem = {-W0 / (QFunc::var() - X0), QFunc(1) / (QFunc::var() - X0)};
      x_of_v = X0 + (QFunc(w0 * 2) * v - QFunc(P.derivative().eval(x0))) / (QFunc(p2) - v * v);
      y_of_v = W0 + v * (x_of_v - X0);
    } else {
      throw Error(ErrorKind::NoRationalPoint, "conic " + str(P, "x") + " without a rational point");
    }
  }
  const HyperElemQ dv = c.derive(v_elem, dx);
  Genus0Pair g;
  g.h = on_param(dv, x_of_v, y_of_v);
  g.y = on_param(y, x_of_v, y_of_v);
  g.yp = on_param(yp, x_of_v, y_of_v);
  return {g};
}

std::optional<Rat> rational_root_of(const Rat& q, int k) {
  if (k == 1) return q;
  if (q.sign() < 0 && k % 2 == 0) return std::nullopt;
  Int n = abs(q.num()), d = q.den(), rn, rd;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  Rat r(rn, rd);
  return q.sign() < 0 ? -r : r;
}

// c with h = c v^a, if h has that shape.
std::optional<Rat> monomial_coeff(const QFunc& h, int a) {
  const int dn = h.num().degree(), dd = h.den().degree();
  if (h.num() != UPoly::monomial(h.num().lc(), dn) || h.den() != UPoly::monomial(h.den().lc(), dd)) return std::nullopt;
  if (dn - dd != a) return std::nullopt;
  return h.num().lc() / h.den().lc();
}

bool maps_divisor(const Moebius<Rat>& m, const VectorFieldDivisor& d1, const VectorFieldDivisor& d2) {
  for (const auto& p : d1) {
    const ProjPoint<Rat> img = m(p.point);
    auto it = std::find_if(d2.begin(), d2.end(), [&](const VFPoint& q) { return q.point == img; });
    if (it == d2.end() || it->order != p.order) return false;
  }
  return true;
}

std::vector<int> sorted_orders(const VectorFieldDivisor& d) {
  std::vector<int> o;
  for (const auto& p : d) o.push_back(p.order);
  std::sort(o.begin(), o.end());
  return o;
}

Genus0Equivalence small_support(const Genus0Pair& p1, const Genus0Pair& p2, const VectorFieldDivisor& d1,
                                const VectorFieldDivisor& d2) {
  Genus0Equivalence out;
  if (d1.size() == 1) {
    const Moebius<Rat> n1 = normalizer(d1[0].point), n2 = normalizer(d2[0].point);
    const QFunc h1 = conjugate_vf(n1, p1.h), h2 = conjugate_vf(n2, p2.h);
    if (!h1.is_constant() || !h2.is_constant()) throw std::logic_error("normalized field is not constant");
    const Moebius<Rat> scale(h2.constant_value() / h1.constant_value(), Rat(0), Rat(0), Rat(1));
    out.verdict = Verdict::Yes;
    out.witness = n2.inverse().compose(scale).compose(n1);
    return out;
  }
  bool irrational = false;
  const std::vector<std::pair<size_t, size_t>> assignments{{0, 1}, {1, 0}};
  for (const auto& [i, j] : assignments) {
    if (d1[0].order != d2[i].order) continue;
    const int a = d1[0].order;
    const Moebius<Rat> n1 = normalizer(d1[0].point, d1[1].point);
    const Moebius<Rat> n2 = normalizer(d2[i].point, d2[j].point);
    auto c1 = monomial_coeff(conjugate_vf(n1, p1.h), a);
    auto c2 = monomial_coeff(conjugate_vf(n2, p2.h), a);
    if (!c1 || !c2) throw std::logic_error("normalized field is not monomial");
    // y = lambda u turns c1 u^a into c1 lambda^(1-a) y^a.
    std::optional<Rat> lambda;
    const Rat ratio = *c2 / *c1;
    if (a == 1) {
      if (ratio == Rat(1)) lambda = Rat(1);
    } else {
      const int e = 1 - a;
      lambda = e > 0 ? rational_root_of(ratio, e) : rational_root_of(Rat(1) / ratio, -e);
      if (!lambda) irrational = true;
    }
    if (!lambda) continue;
    out.verdict = Verdict::Yes;
    out.witness = n2.inverse().compose(Moebius<Rat>(*lambda, Rat(0), Rat(0), Rat(1))).compose(n1);
    return out;
  }
  out.verdict = irrational ? Verdict::NotFoundOverQ : Verdict::CertifiedNo;
  out.reason = irrational ? "scaling constant is irrational" : "stabilizer of the two support points cannot match";
  return out;
}

Genus0Equivalence equivalence_impl(const Genus0Pair& p1, const Genus0Pair& p2, bool parallel) {
  const VectorFieldDivisor d1 = vf_divisor(p1.h), d2 = vf_divisor(p2.h);
  Genus0Equivalence out;
  if (sorted_orders(d1) != sorted_orders(d2)) {
    out.verdict = Verdict::CertifiedNo;
    out.reason = "divisor orders differ";
    return out;
  }
  if (d1.size() <= 2) return small_support(p1, p2, d1, d2);

  std::vector<std::tuple<size_t, size_t, size_t>> cands;
  const size_t n = d2.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (i != j && j != k && i != k && d2[i].order == d1[0].order && d2[j].order == d1[1].order &&
            d2[k].order == d1[2].order)
          cands.emplace_back(i, j, k);

  auto candidate = [&](size_t idx) -> std::optional<Moebius<Rat>> {
    const auto [i, j, k] = cands[idx];
    Moebius<Rat> m = triple_map(d1[0].point, d1[1].point, d1[2].point, d2[i].point, d2[j].point, d2[k].point);
    if (!maps_divisor(m, d1, d2)) return std::nullopt;
    if (!(conjugate_vf(m, p1.h) == p2.h)) return std::nullopt;
    return m;
  };

  std::optional<Moebius<Rat>> found;
  if (parallel) {
    std::vector<std::optional<Moebius<Rat>>> results(cands.size());
    const long count = static_cast<long>(cands.size());
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < count; ++idx) results[idx] = candidate(static_cast<size_t>(idx));
    for (auto& r : results)
      if (r) {
        found = r;
        break;
      }
  } else {
    for (size_t idx = 0; idx < cands.size() && !found; ++idx) found = candidate(idx);
  }
  if (found) {
    out.verdict = Verdict::Yes;
    out.witness = found;
  } else {
    out.verdict = Verdict::CertifiedNo;
    out.reason = "no Moebius map of the divisor supports conjugates the fields";
  }
  return out;
}

UPoly as_upoly(const RatFunc& c) {
  if (c.den().degree() > 0) throw std::logic_error("expected a polynomial");
  return c.num().scaled(Rat(1) / c.den().lc());
}

}  // namespace

PairXD genus0_pair(const QFunc& h) {
  if (h.is_zero()) throw std::invalid_argument("zero vector field");
  return {Genus0Pair{h, QFunc::var(), h}};
}

PairXD hyper_pair(const UPoly& P, const HyperElemQ& dx) {
  const QCurve c(P);
  return {HyperPair{P, dx, c.dy(dx), c.x(), dx}};
}

PairXD extract_pair(const DiffEq& eq) {
  if (!eq.is_autonomous()) throw Error(ErrorKind::Unsupported, "equation depends on z");
  if (eq.deg_S() == 1 || eq.deg_T() == 1) {
    Genus0Param p = linear_parametrization(eq);
    return {Genus0Pair{to_q(p.g), to_q(p.t_of_u), to_q(p.s_of_u)}};
  }
  if (eq.deg_S() != 2 && eq.deg_T() != 2) {
    GenusReport r = genus(eq);
    throw Error(ErrorKind::NotHyperellipticSupported,
                "genus " + std::to_string(r.genus) + " curve without a degree-2 presentation");
  }
  HyperModel m = quadratic_model(eq);
  const UPoly P = to_rational_poly(m.P);
  const auto& tr = m.transform;
  const BiRat two_a = BiRat(tr.a) * BiRat(2);
  const HyperElemQ W = to_q(HyperElemZ{-BiRat(tr.b) / two_a, BiRat(tr.Q) / two_a});
  const HyperElemQ x = QCurve(P).x();
  const HyperElemQ y = tr.swapped ? W : x;
  const HyperElemQ yp = tr.swapped ? x : W;
  const HyperElemQ dx = to_q(m.dx);
  if (m.genus == 0) return conic_pair(P, dx, y, yp);
  return {HyperPair{P, dx, to_q(m.dy), y, yp}};
}

DiffEq make_autonomous(const Genus0Pair& pair, const QFunc& g) {
  const QFunc dg = pair.h * g.derivative();
  if (dg.is_zero()) throw Error(ErrorKind::NotAGenerator, "D(g) = 0");
  // Res_v(num(g) - T den(g), num(Dg) - S den(Dg)).
  const Poly<STPoly> A = cleared_in_x({{g, 0, 0}, {QFunc(-1), 0, 1}});
  const Poly<STPoly> B = cleared_in_x({{dg, 0, 0}, {QFunc(-1), 1, 0}});
  return finish_autonomous(resultant_domain(A, B));
}

DiffEq make_autonomous(const HyperPair& pair, const HyperElemQ& g) {
  const QCurve c(pair.P);
  const HyperElemQ dg = c.derive(g, pair.dx);
  if (dg.is_zero()) throw Error(ErrorKind::NotAGenerator, "D(g) = 0");
  const QFunc P(pair.P);
  // On the curve g1 (S - d0) = d1 (T - g0), and the chosen coordinate
  // satisfies its characteristic polynomial over Q(x).
  std::vector<XTerm> lin{{g.e1, 1, 0}, {-dg.e1, 0, 1}, {dg.e1 * g.e0 - g.e1 * dg.e0, 0, 0}};
  std::vector<XTerm> chi;
  if (!g.e1.is_zero()) {
    chi = {{QFunc(1), 0, 2}, {QFunc(-2) * g.e0, 0, 1}, {g.e0 * g.e0 - g.e1 * g.e1 * P, 0, 0}};
  } else if (!dg.e1.is_zero()) {
    chi = {{QFunc(1), 2, 0}, {QFunc(-2) * dg.e0, 1, 0}, {dg.e0 * dg.e0 - dg.e1 * dg.e1 * P, 0, 0}};
  } else {
    throw Error(ErrorKind::NotAGenerator, "g and D(g) both lie in Q(x)");
  }
  return finish_autonomous(resultant_domain(cleared_in_x(chi), cleared_in_x(lin)));
}

Disguise disguise(const DiffEq& eq, DisguiseMode mode, const RatFunc& factor) {
  if (factor.is_zero()) throw std::invalid_argument("disguise factor must be nonzero");
  if (!eq.is_autonomous()) throw Error(ErrorKind::Unsupported, "disguise expects an autonomous equation");
  DiffEq base = eq;
  if (mode == DisguiseMode::ScaleS) {
    PairXD p = extract_pair(eq);
    base = p.is_genus0() ? make_autonomous(p.genus0(), p.genus0().yp) : make_autonomous(p.hyper(), p.hyper().yp);
  }
  // New y = factor * old y: old y' = (S - (factor'/factor) T) / factor.
  const RatFunc inv = RatFunc(1) / factor;
  const BiPoly s_old = BiPoly::S().scaled(inv) - BiPoly::T().scaled(factor.derivative() * inv * inv);
  const BiPoly t_old = BiPoly::T().scaled(inv);
  DiffEq out = DiffEq::from_bipoly(base.f().substitute(s_old, t_old));
  return {out, base, factor, mode};
}

VectorFieldDivisor vf_divisor(const QFunc& h) {
  if (h.is_zero()) throw std::invalid_argument("vf_divisor of zero");
  VectorFieldDivisor d;
  for (int part = 0; part < 2; ++part) {
    const UPoly& p = part == 0 ? h.num() : h.den();
    if (p.degree() <= 0) continue;
    for (const auto& [f, m] : factor_univariate_rationals(p).factors) {
      if (f.degree() != 1)
        throw Error(ErrorKind::NonRationalSupport, "irreducible factor " + str(f, "v") + " has no rational root");
      d.push_back({ProjPoint<Rat>(-f.coeff(0)), part == 0 ? m : -m});
    }
  }
  std::sort(d.begin(), d.end(), [](const VFPoint& a, const VFPoint& b) { return a.point < b.point; });
  const int at_inf = h.den().degree() - h.num().degree() + 2;
  if (at_inf != 0) d.push_back({ProjPoint<Rat>::infinity(), at_inf});
  return d;
}

Genus0Equivalence pair_equivalent_genus0(const Genus0Pair& p1, const Genus0Pair& p2) {
  return equivalence_impl(p1, p2, true);
}

Genus0Equivalence pair_equivalent_genus0_serial(const Genus0Pair& p1, const Genus0Pair& p2) {
  return equivalence_impl(p1, p2, false);
}

std::optional<QFunc> algebraic_solution_genus0(const Genus0Pair& p) {
  const HermiteResult<Rat> hr = hermite_reduce(QFunc(1) / p.h);
  if (!hr.remainder.is_zero()) return std::nullopt;
  return hr.rational_part;
}

HyperSolution algebraic_solution_hyper(const HyperPair& p) {
  const QCurve c(p.P);
  auto omega = c.inverse(p.dx);
  if (!omega) throw std::invalid_argument("zero derivation");
  HyperSolution out;
  // dt = omega dx with t = t0 + t1 y: t0' = w0 and t1' + P'/(2P) t1 = w1.
  const HermiteResult<Rat> h0 = hermite_reduce(omega->e0);
  if (!h0.remainder.is_zero()) return out;
  const QFunc& w1 = omega->e1;
  if (w1.is_zero()) {
    out.t = HyperElemQ{h0.rational_part, QFunc()};
    out.denominator = UPoly(Rat(1));
    return out;
  }
  const UPoly& a = w1.num();
  const UPoly& b = w1.den();
  const UPoly M = divmod(b, squarefree_part(b)).first;
  const int n = p.P.degree();
  int top = a.degree() - b.degree() + 1;
  if (n % 2 == 0) top = std::max(top, -n / 2);
  const int bound = M.degree() + top;
  out.denominator = M;
  out.numerator_degree_bound = bound;
  if (bound < 0) return out;

  const UPoly& P = p.P;
  const UPoly dP = P.derivative(), dM = M.derivative();
  // (2P(N'M - NM') + P'NM) b = 2 P M^2 a.
  std::vector<UPoly> cols;
  for (int k = 0; k <= bound; ++k) {
    const UPoly N = UPoly::monomial(Rat(1), k);
    cols.push_back(((N.derivative() * M - N * dM) * P.scaled(Rat(2)) + dP * N * M) * b);
  }
  const UPoly rhs = P.scaled(Rat(2)) * M * M * a;
  int rows = rhs.degree() + 1;
  for (const auto& col : cols) rows = std::max(rows, col.degree() + 1);
  Matrix<Rat> mat = zero_matrix<Rat>(static_cast<size_t>(rows), cols.size());
  std::vector<Rat> vec(static_cast<size_t>(rows), Rat(0));
  for (int r = 0; r < rows; ++r) {
    for (size_t k = 0; k < cols.size(); ++k) mat[r][k] = cols[k].coeff(r);
    vec[r] = rhs.coeff(r);
  }
  auto sol = solve_linear(mat, vec, cols.size());
  if (!sol) return out;
  const QFunc t1(UPoly(std::move(*sol)), M);
  out.t = HyperElemQ{h0.rational_part, t1};
  return out;
}

std::vector<BiRat> infinitesimal_automorphisms(const BiRat& g, int degree_bound) {
  if (g.is_zero()) throw std::invalid_argument("zero vector field");
  const BiRat M(g.den());
  const BiRat gu = g.derivative();
  std::vector<std::pair<int, int>> basis;
  std::vector<BiRat> images;
  for (int i = 0; i <= degree_bound; ++i) {
    for (int j = 0; j <= degree_bound; ++j) {
      const BiRat h = BiRat(RFPoly::monomial(RatFunc(UPoly::monomial(Rat(1), j)), i)) / M;
      images.push_back(h * gu - g * h.derivative() - coeff_derivative(h));
      basis.emplace_back(i, j);
    }
  }
  // Common denominator over Q(z)[u], then over Q[z].
  RFPoly L(RatFunc(1));
  for (const auto& e : images) L = divmod(L * e.den(), gcd(L, e.den())).first;
  std::vector<RFPoly> nums;
  UPoly zl(Rat(1));
  for (const auto& e : images) {
    RFPoly q = divmod(L, e.den()).first * e.num();
    for (const auto& c : q.coeffs()) zl = divmod(zl * c.den(), gcd(zl, c.den())).first;
    nums.push_back(std::move(q));
  }
  std::map<std::pair<int, int>, size_t> row_of;
  std::vector<std::vector<std::pair<size_t, Rat>>> entries(nums.size());
  for (size_t col = 0; col < nums.size(); ++col) {
    for (int k = 0; k <= nums[col].degree(); ++k) {
      const UPoly c = as_upoly(nums[col].coeffs()[k] * RatFunc(zl));
      for (int l = 0; l <= c.degree(); ++l) {
        if (c.coeff(l).is_zero()) continue;
        auto [it, inserted] = row_of.emplace(std::make_pair(k, l), row_of.size());
        entries[col].emplace_back(it->second, c.coeff(l));
      }
    }
  }
  Matrix<Rat> mat = zero_matrix<Rat>(row_of.size(), nums.size());
  for (size_t col = 0; col < nums.size(); ++col)
    for (const auto& [r, v] : entries[col]) mat[r][col] = v;
  std::vector<BiRat> out;
  for (const auto& vec : nullspace(mat, nums.size())) {
    RFPoly N;
    for (size_t col = 0; col < vec.size(); ++col) {
      if (vec[col].is_zero()) continue;
      const auto [i, j] = basis[col];
      N = N + RFPoly::monomial(RatFunc(UPoly::monomial(vec[col], j)), i);
    }
    out.push_back(BiRat(N) / M);
  }
  return out;
}

}  // namespace odeq
