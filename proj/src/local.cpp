#include "odeq/local.hpp"

#include <algorithm>
#include <map>

#include "odeq/factor.hpp"

namespace odeq {

namespace {

struct Term {
  int i;  // degree in S
  int w;
  int v;
  Rat lead;
};

struct RFTerm {
  int k;
  int ord;
  RatFunc lead;
};

Rat slope_of(const NewtonPoint& a, const NewtonPoint& b) {
  return Rat(Int(b.v - a.v), Int(b.w - a.w));
}

// Char poly in X of an edge must be Q(X^m) with Q squarefree and Q(0) != 0.
template <class K>
bool separable_in_power(const Poly<K>& p, int m) {
  std::vector<K> q;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k % m != 0) {
      if (!is_zero(p.coeff(k))) return false;
      continue;
    }
    q.push_back(p.coeff(k));
  }
  Poly<K> Q(std::move(q));
  if (is_zero(Q.coeff(0))) return false;
  return Q.degree() == 0 || gcd(Q, Q.derivative()).degree() == 0;
}

}  // namespace

std::vector<NewtonPoint> lower_hull(std::vector<NewtonPoint> points) {
  std::map<int, int> lowest;
  for (const auto& p : points) {
    auto it = lowest.find(p.w);
    if (it == lowest.end() || p.v < it->second) lowest[p.w] = p.v;
  }
  std::vector<NewtonPoint> hull;
  for (const auto& [w, v] : lowest) {
    NewtonPoint p{w, v};
    while (hull.size() >= 2) {
      const NewtonPoint& o = hull[hull.size() - 2];
      const NewtonPoint& a = hull.back();
      long cross = static_cast<long>(a.w - o.w) * (p.v - o.v) - static_cast<long>(a.v - o.v) * (p.w - o.w);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

std::vector<PuiseuxLead> puiseux_leading(const DiffEq& eq, const LocalPoint& at) {
  std::vector<Term> terms;
  for (const auto& [key, c] : eq.f().terms()) {
    const int i = key.first, j = key.second;
    LocalLead ll = at.is_infinity() ? local_lead_at_infinity(c) : local_lead(c, at.value());
    const int v = at.is_infinity() ? ll.order + i : ll.order - i;
    terms.push_back({i, i + j, v, ll.lead});
  }
  std::vector<NewtonPoint> pts;
  for (const auto& t : terms) pts.push_back({t.w, t.v});
  auto hull = lower_hull(pts);

  std::vector<PuiseuxLead> out;
  for (size_t e = 0; e + 1 < hull.size(); ++e) {
    const NewtonPoint a = hull[e], b = hull[e + 1];
    const Rat mu = -slope_of(a, b);
    const int len = b.w - a.w;
    const int m = static_cast<int>(mu.den().get_si());
    PuiseuxLead lead;
    lead.exponent = mu;
    lead.edge_length = len;
    lead.branch_count = len / m;
    if (mu.sign() >= 0) {
      lead.constraint = UPoly(Rat(1));
      out.push_back(lead);
      continue;
    }
    std::vector<Rat> coeffs(static_cast<size_t>(len) + 1, Rat(0));
    const Rat level = Rat(a.v) + mu * Rat(a.w);
    const Rat dmu = at.is_infinity() ? -mu : mu;
    for (const auto& t : terms) {
      if (Rat(t.v) + mu * Rat(t.w) != level) continue;
      coeffs[t.w - a.w] += t.lead * dmu.pow(static_cast<unsigned>(t.i));
    }
    UPoly chi(std::move(coeffs));
    if (chi.valuation() != 0 || chi.degree() != len || !separable_in_power(chi, m))
      throw Error(ErrorKind::UnsupportedLocalForm,
                  "degenerate Newton-polygon edge with exponent " + mu.str());
    lead.constraint = primitive_integer_part(chi);
    out.push_back(lead);
  }
  std::sort(out.begin(), out.end(),
            [](const PuiseuxLead& x, const PuiseuxLead& y) { return x.exponent < y.exponent; });
  return out;
}

std::vector<int> ramification_indices(const BiPoly& F, const ProjPoint<RatFunc>& alpha) {
  const Poly<RFPoly> view = F.as_poly_in_S();
  std::vector<RFTerm> terms;
  for (int k = 0; k <= view.degree(); ++k) {
    const RFPoly& c = view.coeffs()[k];
    if (c.is_zero()) continue;
    if (alpha.is_infinity()) {
      terms.push_back({k, -c.degree(), c.lc()});
    } else {
      RFPoly shifted = c.compose(RFPoly(std::vector<RatFunc>{alpha.value(), RatFunc(1)}));
      int v = shifted.valuation();
      terms.push_back({k, v, shifted.coeff(v)});
    }
  }
  std::vector<NewtonPoint> pts;
  for (const auto& t : terms) pts.push_back({t.k, t.ord});
  auto hull = lower_hull(pts);
  std::vector<int> out;
  for (size_t e = 0; e + 1 < hull.size(); ++e) {
    const NewtonPoint a = hull[e], b = hull[e + 1];
    const Rat s = slope_of(a, b);
    const int q = static_cast<int>(s.den().get_si());
    const int len = b.w - a.w;
    std::vector<RatFunc> coeffs(static_cast<size_t>(len) + 1, RatFunc(0));
    for (const auto& t : terms) {
      if (t.k < a.w || t.k > b.w) continue;
      if (Rat(t.ord - a.v) != s * Rat(t.k - a.w)) continue;
      coeffs[t.k - a.w] += t.lead;
    }
    RFPoly chi(std::move(coeffs));
    if (!separable_in_power(chi, q))
      throw Error(ErrorKind::UnsupportedLocalForm,
                  "repeated leading coefficients over " + str(alpha) + " need further blow-ups");
    for (int c = 0; c < len / q; ++c) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace odeq
