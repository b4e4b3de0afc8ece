#pragma once

// Autonomous equations as pairs (X, D): a curve over Q with a vector
// field. Genus 0 pairs live on Q(v) with D = h(v) d/dv; hyperelliptic pairs
// on Q(x, y) with y^2 = P(x).

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "odeq/curve.hpp"
#include "odeq/moebius.hpp"
#include "odeq/verdict.hpp"

namespace odeq {

// Rational functions over Q in the chart variable v (or x) reuse RatFunc.
using QFunc = RatFunc;

struct Genus0Pair {
  QFunc h;   // D(v) = h
  QFunc y;   // the unknown y as a function of v
  QFunc yp;  // y'
};

struct HyperPair {
  UPoly P;
  HyperElemQ dx;
  HyperElemQ dy;
  HyperElemQ y;   // the unknown y on the model
  HyperElemQ yp;  // y'

  HyperCurve<Rat> curve() const { return HyperCurve<Rat>(P); }
};

struct PairXD {
  std::variant<Genus0Pair, HyperPair> model;

  bool is_genus0() const { return std::holds_alternative<Genus0Pair>(model); }
  const Genus0Pair& genus0() const { return std::get<Genus0Pair>(model); }
  const HyperPair& hyper() const { return std::get<HyperPair>(model); }
};

PairXD extract_pair(const DiffEq& eq);

// Genus 0 pair from a bare vector field h d/dv, with y = v.
PairXD genus0_pair(const QFunc& h);
// Hyperelliptic pair; dy is derived from dx.
PairXD hyper_pair(const UPoly& P, const HyperElemQ& dx);

// Irreducible G with G(D(g), g) = 0 generating the same pair.
DiffEq make_autonomous(const Genus0Pair& pair, const QFunc& g);
DiffEq make_autonomous(const HyperPair& pair, const HyperElemQ& g);

enum class DisguiseMode { ScaleT, ScaleS };

struct Disguise {
  DiffEq equation;
  DiffEq base;  // the autonomous equation that was scaled
  RatFunc factor;
  DisguiseMode mode;
};

// y_new = factor * y (ScaleT) or factor * y' (ScaleS).
Disguise disguise(const DiffEq& eq, DisguiseMode mode, const RatFunc& factor);

struct VFPoint {
  ProjPoint<Rat> point;
  int order;
  friend bool operator==(const VFPoint&, const VFPoint&) = default;
};
using VectorFieldDivisor = std::vector<VFPoint>;

// Divisor of h d/dv on P^1; order at infinity in the chart w = 1/v.
VectorFieldDivisor vf_divisor(const QFunc& h);

struct Genus0Equivalence {
  Verdict verdict = Verdict::CertifiedNo;
  std::optional<Moebius<Rat>> witness;  // y = witness(u), u the p1 chart
  std::string reason;
};

Genus0Equivalence pair_equivalent_genus0(const Genus0Pair& p1, const Genus0Pair& p2);
// Serial reference for the triple search (identical result).
Genus0Equivalence pair_equivalent_genus0_serial(const Genus0Pair& p1, const Genus0Pair& p2);

// t with h dt/dv = 1, or nullopt: no algebraic solution.
std::optional<QFunc> algebraic_solution_genus0(const Genus0Pair& p);

struct HyperSolution {
  std::optional<HyperElemQ> t;
  int numerator_degree_bound = 0;  // for the y-coefficient
  UPoly denominator;               // universal denominator for the y-coefficient
};

// t in Q(x, y) with D(t) = 1, or nullopt if none exists.
HyperSolution algebraic_solution_hyper(const HyperPair& p);

// Basis of h with h g_u - g h_u = h_z, h = N/M with M the u-denominator of g
// and N of degree <= bound in u and in z.
std::vector<BiRat> infinitesimal_automorphisms(const BiRat& g, int degree_bound);

}  // namespace odeq
