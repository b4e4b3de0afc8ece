#pragma once

// Semi-autonomy and strict equivalence of hyperelliptic equations through
// their branch sets, plus the j-invariant conditions in genus 1.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "odeq/autonomous.hpp"

namespace odeq {

template <class K>
using RootSet = std::vector<ProjPoint<K>>;

// The image of s under the map sending (p, q, r) to (0, 1, infinity).
template <class K>
ProjPoint<K> cross_ratio(const ProjPoint<K>& p, const ProjPoint<K>& q, const ProjPoint<K>& r,
                         const ProjPoint<K>& s) {
  if (p == q || q == r || p == r) throw Error(ErrorKind::DegenerateTuple, "cross_ratio: p, q, r must be distinct");
  return normalizer(p, q, r)(s);
}

// A Moebius map sending R into P^1(Q), normalizing the first three points to
// 0, 1, infinity; nullopt if none exists.
std::optional<Moebius<RatFunc>> semi_autonomous_test(const RootSet<RatFunc>& R);

template <class K>
struct Transporter {
  std::vector<Moebius<K>> maps;  // in lexicographic order of the image triple
  size_t candidates = 0;         // image triples examined
  bool truncated = false;        // max_candidates reached before the end
};

// All A with A(R1) = R2, from the images of the first three points of R1.
// max_candidates = 0 means no cap.
template <class K>
Transporter<K> transporter(const RootSet<K>& R1, const RootSet<K>& R2, size_t max_candidates = 0);
template <class K>
Transporter<K> transporter_serial(const RootSet<K>& R1, const RootSet<K>& R2, size_t max_candidates = 0);

// x1 = moebius(x2), y1 = lambda y2 / (c x2 + d)^(g+1) with lambda^2 = lambda_sq.
struct FieldIso {
  Moebius<RatFunc> moebius;
  RatFunc lambda_sq;
  bool requires_sqrt = false;  // lambda is not in Q(z)
  int sign = 1;                // lambda = sign * canonical root of lambda_sq

  std::optional<RatFunc> lambda() const;
};

// The two lifts of A to an isomorphism of y1^2 = P1 onto y2^2 = P2; needs A(R2) = R1.
std::vector<FieldIso> lift_to_field_iso(const Moebius<RatFunc>& A, const HyperModel& M1, const HyperModel& M2);

// The lift conjugating D1 into D2, if any.
std::optional<FieldIso> conjugating_lift(const Moebius<RatFunc>& A, const HyperModel& M1, const HyperModel& M2);

struct IsoCheck {
  bool curve_identity = false;  // phi(y1)^2 = P1(phi(x1))
  bool derivation = false;      // D2(phi(x1)) = phi(D1(x1))
  HyperElemZ residual;          // D2(phi(x1)) - phi(D1(x1)) when lambda is in Q(z)
};

// Re-check by transporting D1 through the witness on the second model.
IsoCheck check_field_iso(const FieldIso& iso, const HyperModel& M1, const HyperModel& M2);

struct EquivOptions {
  size_t max_candidates = 0;
  bool parallel = true;
};

struct EquivResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<FieldIso> witness;
  std::string reason;
  size_t candidates = 0;
  size_t transporter_size = 0;
  bool truncated = false;
};

// Strict equivalence of two equations with hyperelliptic models of genus >= 2.
EquivResult strict_equiv_hyper(const DiffEq& e1, const DiffEq& e2, const EquivOptions& opts = {});
EquivResult strict_equiv_hyper(const HyperModel& M1, const HyperModel& M2, const EquivOptions& opts = {});

struct AutonomyResult {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;
  std::optional<Moebius<RatFunc>> normalizer;  // x~ = normalizer(x)
  RatFunc lambda_sq;                            // P(x) (c x~ + d)^(2g+2) = lambda_sq P0(x~)
  std::optional<HyperPair> pair;                // the autonomous pair over Q
};

AutonomyResult autonomous_test_hyper(const DiffEq& e);
AutonomyResult autonomous_test_hyper(const HyperModel& M);

enum class Necessary { ObstructionFound, Inconclusive };
const char* necessary_name(Necessary n);

struct EllipticCheck {
  Necessary result = Necessary::Inconclusive;
  RatFunc j1, j2;
};

EllipticCheck elliptic_necessary(const DiffEq& e1, const DiffEq& e2);
EllipticCheck elliptic_semi_autonomous_necessary(const DiffEq& e);

}  // namespace odeq
