#include "odeq/bipoly.hpp"

#include <cstdlib>
#include <vector>

#include "odeq/factor.hpp"

namespace odeq {

int max_degree() {
  static const int cap = [] {
    const char* env = std::getenv("ODEQ_MAX_DEGREE");
    if (env == nullptr) return 512;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0 || v > 1000000) return 512;
    return static_cast<int>(v);
  }();
  return cap;
}

void check_degree(int degree, const char* where) {
  if (degree > max_degree())
    throw Error(ErrorKind::ResourceLimit, std::string(where) + ": degree " +
                                              std::to_string(degree) + " exceeds ODEQ_MAX_DEGREE=" +
                                              std::to_string(max_degree()));
}

BiPoly BiPoly::monomial(const RatFunc& c, int i, int j) {
  BiPoly r;
  if (!c.is_zero()) r.terms_[{i, j}] = c;
  return r;
}

BiPoly BiPoly::from_poly_in_S(const Poly<RFPoly>& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    const RFPoly& q = p.coeffs()[i];
    for (int j = 0; j <= q.degree(); ++j)
      if (!q.coeffs()[j].is_zero()) r.terms_[{i, j}] = q.coeffs()[j];
  }
  return r;
}

BiPoly BiPoly::from_poly_in_T(const Poly<RFPoly>& p) { return from_poly_in_S(p).swap_ST(); }

Poly<RFPoly> BiPoly::as_poly_in_S() const {
  if (is_zero()) return {};
  std::vector<std::vector<RatFunc>> rows(static_cast<size_t>(deg_S()) + 1);
  for (const auto& [k, c] : terms_) {
    auto& row = rows[k.first];
    if (row.size() <= static_cast<size_t>(k.second)) row.resize(k.second + 1, RatFunc(0));
    row[k.second] = c;
  }
  std::vector<RFPoly> out;
  for (auto& row : rows) out.emplace_back(std::move(row));
  return Poly<RFPoly>(std::move(out));
}

Poly<RFPoly> BiPoly::as_poly_in_T() const { return swap_ST().as_poly_in_S(); }

Poly<BiRat> BiPoly::over_T_field() const {
  return as_poly_in_S().map_coeffs([](const RFPoly& q) { return BiRat(q); });
}

Poly<BiRat> BiPoly::over_S_field() const {
  return as_poly_in_T().map_coeffs([](const RFPoly& q) { return BiRat(q); });
}

RatFunc BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? RatFunc(0) : it->second;
}

int BiPoly::deg_S() const {
  if (is_zero()) return kMinusInfinity;
  return terms_.rbegin()->first.first;
}

int BiPoly::deg_T() const {
  if (is_zero()) return kMinusInfinity;
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int BiPoly::total_degree() const {
  if (is_zero()) return kMinusInfinity;
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

bool BiPoly::is_z_free() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  check_degree(a.total_degree() + b.total_degree(), "BiPoly product");
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      BiPoly::Key k{ka.first + kb.first, ka.second + kb.second};
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        r.terms_.emplace(k, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->second.is_zero()) {
      it = r.terms_.erase(it);
    } else {
      ++it;
    }
  }
  return r;
}

BiPoly BiPoly::scaled(const RatFunc& c) const {
  if (c.is_zero()) return {};
  BiPoly r = *this;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  if (!is_zero()) check_degree(static_cast<int>(e) * total_degree(), "BiPoly power");
  BiPoly result(RatFunc(1)), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

BiPoly BiPoly::d_S() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) r.terms_[{k.first - 1, k.second}] = c * RatFunc(k.first);
  return r;
}

BiPoly BiPoly::d_T() const {
  BiPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) r.terms_[{k.first, k.second - 1}] = c * RatFunc(k.second);
  return r;
}

BiPoly BiPoly::d_z() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) {
    RatFunc d = c.derivative();
    if (!d.is_zero()) r.terms_[k] = d;
  }
  return r;
}

BiPoly BiPoly::swap_ST() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
  return r;
}

BiPoly BiPoly::compose_z(const RatFunc& g) const {
  BiPoly r;
  for (const auto& [k, c] : terms_) {
    RatFunc v = c.compose(g);
    if (!v.is_zero()) r.terms_[k] = v;
  }
  return r;
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return {};
  UPoly l(Rat(1));
  for (const auto& [k, c] : terms_) l = divmod(l * c.den(), gcd(l, c.den())).first;
  BiPoly r;
  UPoly g;
  for (const auto& [k, c] : terms_) {
    UPoly n = divmod(c.num() * l, c.den()).first;
    g = gcd(g, n);
    r.terms_[k] = RatFunc(n);
  }
  Int num = 0, den = 1;
  for (auto& [k, c] : r.terms_) {
    UPoly n = divmod(c.num(), g).first;
    c = RatFunc(n);
    Rat content = rational_content(n);
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), content.num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), content.den().get_mpz_t());
  }
  Rat scale(den, num);
  if (r.terms_.rbegin()->second.num().lc().sign() < 0) scale = -scale;
  for (auto& [k, c] : r.terms_) c = c * RatFunc(scale);
  return r;
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  static const std::vector<std::string> zvars{"z"};
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    auto append = [&mono](const std::string& piece) {
      if (piece.empty()) return;
      mono += mono.empty() ? piece : "*" + piece;
    };
    append(monomial_str("S", k.first));
    append(monomial_str("T", k.second));
    Formatted f = format_signed(c, std::span<const std::string>(zvars));
    std::string coef;
    if (f.compound) {
      coef = "(" + f.body + ")";
    } else if (!(f.body == "1" && !mono.empty())) {
      coef = f.body;
    }
    std::string piece = coef;
    if (!mono.empty()) piece = coef.empty() ? mono : coef + "*" + mono;
    if (first) {
      out = (f.negative ? "-" : "") + piece;
      first = false;
    } else {
      out += (f.negative ? " - " : " + ") + piece;
    }
  }
  return out;
}

}  // namespace odeq
