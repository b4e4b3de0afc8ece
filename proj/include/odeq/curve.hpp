#pragma once

// The curve X attached to f: genus, rational parametrizations for curves
// linear in a variable, hyperelliptic models y^2 = P(x) and j-invariants.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "odeq/diffeq.hpp"
#include "odeq/proj_point.hpp"

namespace odeq {

// ------------------------------------------------ hyperelliptic arithmetic

// e0 + e1*y in C(x)[y]/(y^2 - P).
template <class C>
struct HyperElem {
  Fraction<C> e0;
  Fraction<C> e1;

  friend bool operator==(const HyperElem&, const HyperElem&) = default;
  bool is_zero() const { return e0.is_zero() && e1.is_zero(); }
};

template <class C>
class HyperCurve {
 public:
  using F = Fraction<C>;
  using E = HyperElem<C>;

  HyperCurve() = default;
  explicit HyperCurve(Poly<C> P) : P_(std::move(P)), Pf_(P_) {}

  const Poly<C>& P() const { return P_; }

  E constant(const F& c) const { return {c, F()}; }
  E x() const { return {F::var(), F()}; }
  E y() const { return {F(), F(1)}; }
  E add(const E& a, const E& b) const { return {a.e0 + b.e0, a.e1 + b.e1}; }
  E sub(const E& a, const E& b) const { return {a.e0 - b.e0, a.e1 - b.e1}; }
  E mul(const E& a, const E& b) const {
    return {a.e0 * b.e0 + a.e1 * b.e1 * Pf_, a.e0 * b.e1 + a.e1 * b.e0};
  }
  E scale(const E& a, const F& c) const { return {a.e0 * c, a.e1 * c}; }
  F norm(const E& a) const { return a.e0 * a.e0 - a.e1 * a.e1 * Pf_; }
  std::optional<E> inverse(const E& a) const {
    F n = norm(a);
    if (n.is_zero()) return std::nullopt;
    F inv = F(1) / n;
    return E{a.e0 * inv, -a.e1 * inv};
  }

  // D of an element of C(x): coefficient derivation plus d/dx times D(x).
  E derive_coeff(const F& c, const E& dx) const {
    return add(constant(coeff_derivative(c)), scale(dx, c.derivative()));
  }
  // D(y) from 2 y D(y) = P_z + P_x D(x).
  E dy(const E& dx) const {
    const F pz = coeff_derivative(Pf_);
    const F px = Pf_.derivative();
    const F half_over_p = F(1) / (F(2) * Pf_);
    return {px * dx.e1 / F(2), (pz + px * dx.e0) * half_over_p};
  }
  E derive(const E& a, const E& dx) const {
    return add(add(derive_coeff(a.e0, dx), mul(derive_coeff(a.e1, dx), y())),
               mul(constant(a.e1), dy(dx)));
  }

 private:
  Poly<C> P_;
  F Pf_;
};

using HyperElemZ = HyperElem<RatFunc>;  // over Q(z)(x)
using HyperElemQ = HyperElem<Rat>;      // over Q(x)

// -------------------------------------------------------------- models

// Parametrization of a genus-0 equation linear in one variable: the
// parameter u satisfies u' = g(u, z), and y = t_of_u, y' = s_of_u.
struct Genus0Param {
  bool parameter_is_s = false;  // false: u = y; true: u = y'
  BiRat g;
  BiRat t_of_u;
  BiRat s_of_u;
};

struct HyperTransform {
  bool swapped = false;  // false: x = y, W = y'; true: x = y', W = y
  RFPoly a, b;           // f = a W^2 + b W + c with a, b, c in Q(z)[x]
  RFPoly Q;              // y = (2 a W + b) / Q
};

struct HyperModel {
  RFPoly P;  // squarefree in x
  std::optional<std::vector<ProjPoint<RatFunc>>> roots;
  int genus = 0;
  HyperTransform transform;
  HyperElemZ dx;
  HyperElemZ dy;

  HyperCurve<RatFunc> curve() const { return HyperCurve<RatFunc>(P); }
};

struct BranchPoint {
  ProjPoint<RatFunc> point;
  std::vector<int> indices;
};

struct BranchTable {
  int degree = 0;                 // n = deg_S f
  int simple_branch_count = 0;    // simple roots of the discriminant
  std::vector<BranchPoint> points;  // multiple roots and infinity
  int total_ramification = 0;     // sum (e - 1)
};

enum class GenusMethod { LinearInVariable, HyperellipticNormalForm, RiemannHurwitz };

const char* genus_method_name(GenusMethod m);

struct GenusReport {
  int genus = 0;
  GenusMethod method = GenusMethod::LinearInVariable;
  std::variant<Genus0Param, HyperModel, BranchTable> certificate;
};

// Degree-2 presentation (deg_S f = 2, else deg_T f = 2); any genus.
HyperModel quadratic_model(const DiffEq& eq);

GenusReport genus(const DiffEq& eq);

// Riemann-Hurwitz for the projection (S, T) -> T of F = 0.
GenusReport genus_riemann_hurwitz(const BiPoly& F);

// Requires genus >= 2 and a degree-2 presentation.
HyperModel hyperelliptic_model(const DiffEq& eq);

Genus0Param linear_parametrization(const DiffEq& eq);

// j-invariant of a genus-1 equation with a degree-2 presentation.
RatFunc j_invariant(const DiffEq& eq);
RatFunc j_invariant_of(const RFPoly& P, const std::optional<std::vector<ProjPoint<RatFunc>>>& roots);

std::vector<ProjPoint<RatFunc>> split_roots(const RFPoly& P, bool& split);

}  // namespace odeq
