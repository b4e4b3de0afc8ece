#include "odeq/roots.hpp"

#include <algorithm>

#include "odeq/factor.hpp"

namespace odeq {

Poly<UPoly> clear_denominators(const RFPoly& p) {
  UPoly l(Rat(1));
  for (const auto& c : p.coeffs()) l = divmod(l * c.den(), gcd(l, c.den())).first;
  std::vector<UPoly> out;
  for (const auto& c : p.coeffs()) out.push_back(divmod(c.num() * l, c.den()).first);
  return Poly<UPoly>(std::move(out));
}

std::vector<UPoly> monic_divisors(const UPoly& p) {
  std::vector<UPoly> divs{UPoly(Rat(1))};
  for (const auto& [f, m] : factor_univariate_rationals(p).factors) {
    std::vector<UPoly> next;
    for (const auto& d : divs) {
      UPoly acc = d;
      for (int e = 0; e <= m; ++e) {
        next.push_back(acc);
        acc = acc * f;
      }
    }
    divs = std::move(next);
  }
  return divs;
}

std::vector<RatFunc> rational_function_roots(const RFPoly& p) {
  std::vector<RatFunc> roots;
  if (p.degree() <= 0) return roots;
  Poly<UPoly> q = clear_denominators(p);
  const int v = q.valuation();
  if (v > 0) {
    roots.emplace_back(0);
    q = q.shift_degree(-v);
  }
  const int n = q.degree();
  if (n >= 1) {
    const auto nums = monic_divisors(q.coeff(0));
    const auto dens = monic_divisors(q.lc());
    for (const auto& num : nums) {
      for (const auto& den : dens) {
        if (gcd(num, den).degree() > 0) continue;
        // Coefficient of c^i in den^n * P(c * num / den) is a_i num^i den^(n-i).
        std::vector<UPoly> terms(static_cast<size_t>(n) + 1);
        int zdeg = 0;
        for (int i = 0; i <= n; ++i) {
          terms[i] = q.coeff(i) * num.pow(static_cast<unsigned>(i)) *
                     den.pow(static_cast<unsigned>(n - i));
          zdeg = std::max(zdeg, terms[i].degree());
        }
        UPoly cond;
        for (int k = 0; k <= zdeg; ++k) {
          std::vector<Rat> cs(static_cast<size_t>(n) + 1);
          for (int i = 0; i <= n; ++i) cs[i] = terms[i].coeff(k);
          cond = gcd(cond, UPoly(std::move(cs)));
          if (cond.degree() == 0) break;
        }
        if (cond.degree() < 1) continue;
        for (const Rat& c : rational_roots(cond)) {
          if (c.is_zero()) continue;
          roots.push_back(RatFunc(num.scaled(c), den));
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RatFunc& a, const RatFunc& b) { return canonical_cmp(a, b) < 0; });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace odeq
