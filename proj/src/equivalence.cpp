#include "odeq/equivalence.hpp"

#include <array>
#include <stdexcept>

namespace odeq {

namespace {

bool z_free(const BiRat& f) {
  for (const auto& c : f.num().coeffs())
    if (!c.is_constant()) return false;
  for (const auto& c : f.den().coeffs())
    if (!c.is_constant()) return false;
  return true;
}

UPoly to_upoly(const RFPoly& p) {
  std::vector<Rat> out;
  for (const auto& c : p.coeffs()) out.push_back(c.constant_value());
  return UPoly(std::move(out));
}

QFunc to_q(const BiRat& f) { return QFunc(to_upoly(f.num()), to_upoly(f.den())); }

template <class K>
Poly<K> linear(const K& lead, const K& constant) {
  return Poly<K>(std::vector<K>{constant, lead});
}

template <class K>
bool maps_onto(const Moebius<K>& A, const RootSet<K>& R1, const RootSet<K>& R2) {
  for (const auto& p : R1) {
    const ProjPoint<K> img = A(p);
    if (std::find(R2.begin(), R2.end(), img) == R2.end()) return false;
  }
  return true;
}

template <class K>
Transporter<K> run_transporter(const RootSet<K>& R1, const RootSet<K>& R2, size_t max_candidates, bool parallel) {
  Transporter<K> out;
  const size_t n = R1.size();
  if (R2.size() != n) return out;
  if (n < 3) throw Error(ErrorKind::UnsupportedSmallSupport, "transporter needs at least three points");
  std::vector<std::array<size_t, 3>> triples;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (i != j && j != k && i != k) triples.push_back({i, j, k});
  if (max_candidates > 0 && triples.size() > max_candidates) {
    triples.resize(max_candidates);
    out.truncated = true;
  }
  out.candidates = triples.size();
  const Moebius<K> base = normalizer(R1[0], R1[1], R1[2]);
  std::vector<std::optional<Moebius<K>>> found(triples.size());
  const long count = static_cast<long>(triples.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long t = 0; t < count; ++t) {
    const auto& [i, j, k] = triples[static_cast<size_t>(t)];
    Moebius<K> A = normalizer(R2[i], R2[j], R2[k]).inverse().compose(base);
    if (maps_onto(A, R1, R2)) found[static_cast<size_t>(t)] = std::move(A);
  }
  for (auto& f : found)
    if (f) out.maps.push_back(std::move(*f));
  return out;
}

RatFunc lambda_square(const Moebius<RatFunc>& A, const HyperModel& M1, const HyperModel& M2) {
  const int g = M1.genus;
  const RFPoly moved = homogenize(M1.P, 2 * g + 2, linear(A.a(), A.b()), linear(A.c(), A.d()));
  const BiRat q(moved, M2.P);
  if (q.num().degree() > 0 || q.den().degree() > 0)
    throw Error(ErrorKind::NotASquareCompatible, "Moebius map does not carry one branch set onto the other");
  return q.constant_value();
}

FieldIso make_iso(const Moebius<RatFunc>& A, const RatFunc& lsq, int sign) {
  return FieldIso{A, lsq, !exact_sqrt(lsq).has_value(), sign};
}

}  // namespace

std::optional<Moebius<RatFunc>> semi_autonomous_test(const RootSet<RatFunc>& R) {
  if (R.size() < 3) {
    // Fewer than three points can always be moved to constants.
    if (R.empty()) return Moebius<RatFunc>();
    if (R.size() == 1) return normalizer(R[0]);
    return normalizer(R[0], R[1]);
  }
  const Moebius<RatFunc> A = normalizer(R[0], R[1], R[2]);
  for (size_t i = 3; i < R.size(); ++i) {
    const ProjPoint<RatFunc> img = A(R[i]);
    if (!img.is_infinity() && !img.value().is_constant()) return std::nullopt;
  }
  return A;
}

template <class K>
Transporter<K> transporter(const RootSet<K>& R1, const RootSet<K>& R2, size_t max_candidates) {
  return run_transporter(R1, R2, max_candidates, true);
}

template <class K>
Transporter<K> transporter_serial(const RootSet<K>& R1, const RootSet<K>& R2, size_t max_candidates) {
  return run_transporter(R1, R2, max_candidates, false);
}

template Transporter<Rat> transporter(const RootSet<Rat>&, const RootSet<Rat>&, size_t);
template Transporter<RatFunc> transporter(const RootSet<RatFunc>&, const RootSet<RatFunc>&, size_t);
template Transporter<Rat> transporter_serial(const RootSet<Rat>&, const RootSet<Rat>&, size_t);
template Transporter<RatFunc> transporter_serial(const RootSet<RatFunc>&, const RootSet<RatFunc>&, size_t);

std::optional<RatFunc> FieldIso::lambda() const {
  if (requires_sqrt) return std::nullopt;
  auto root = exact_sqrt(lambda_sq);
  if (!root) return std::nullopt;
  return sign > 0 ? *root : -*root;
}

std::vector<FieldIso> lift_to_field_iso(const Moebius<RatFunc>& A, const HyperModel& M1, const HyperModel& M2) {
  const RatFunc lsq = lambda_square(A, M1, M2);
  return {make_iso(A, lsq, 1), make_iso(A, lsq, -1)};
}

std::optional<FieldIso> conjugating_lift(const Moebius<RatFunc>& A, const HyperModel& M1, const HyperModel& M2) {
  const RatFunc lsq = lambda_square(A, M1, M2);
  const HyperCurve<RatFunc> c2 = M2.curve();
  const HyperElemZ left = c2.derive({A.as_function(), BiRat()}, M2.dx);
  if (left.e0 != substitute(M1.dx.e0, A)) return std::nullopt;
  // D2(A(x2)) has y2-part L1; phi(D1 x1) has lambda * e1(A(x2)) / (c x2 + d)^(g+1).
  const BiRat right = substitute(M1.dx.e1, A) / BiRat(linear(A.c(), A.d()).pow(static_cast<unsigned>(M1.genus + 1)));
  if (left.e1.is_zero() && right.is_zero()) return make_iso(A, lsq, 1);
  if (left.e1.is_zero() || right.is_zero()) return std::nullopt;
  const BiRat rho = left.e1 / right;
  if (rho.num().degree() > 0 || rho.den().degree() > 0) return std::nullopt;
  const RatFunc r = rho.constant_value();
  if (r * r != lsq) return std::nullopt;
  const RatFunc root = *exact_sqrt(lsq);
  return FieldIso{A, lsq, false, r == root ? 1 : -1};
}

IsoCheck check_field_iso(const FieldIso& iso, const HyperModel& M1, const HyperModel& M2) {
  IsoCheck out;
  const HyperCurve<RatFunc> c2 = M2.curve();
  const BiRat Ax = iso.moebius.as_function();
  const BiRat w = BiRat(1) / BiRat(linear(iso.moebius.c(), iso.moebius.d()).pow(static_cast<unsigned>(M1.genus + 1)));
  const BiRat P1x = BiRat(M1.P).compose(Ax);
  const HyperElemZ phix{Ax, BiRat()};
  const HyperElemZ left = c2.derive(phix, M2.dx);
  const BiRat e0 = M1.dx.e0.compose(Ax), e1 = M1.dx.e1.compose(Ax);
  if (auto lambda = iso.lambda()) {
    const HyperElemZ phiy{BiRat(), BiRat(*lambda) * w};
    out.curve_identity = c2.mul(phiy, phiy) == c2.constant(P1x);
    const HyperElemZ image = c2.add(c2.constant(e0), c2.mul(c2.constant(e1), phiy));
    out.residual = c2.sub(left, image);
    out.derivation = out.residual.is_zero();
  } else {
    out.curve_identity = BiRat(iso.lambda_sq) * w * w * BiRat(M2.P) == P1x;
    out.residual = {left.e0 - e0, BiRat()};
    out.derivation = out.residual.is_zero() && left.e1.is_zero() && e1.is_zero();
  }
  return out;
}

EquivResult strict_equiv_hyper(const HyperModel& M1, const HyperModel& M2, const EquivOptions& opts) {
  EquivResult out;
  if (M1.genus != M2.genus) {
    out.verdict = Verdict::CertifiedNo;
    out.reason = "genus " + std::to_string(M1.genus) + " vs " + std::to_string(M2.genus);
    return out;
  }
  if (!M1.roots || !M2.roots) {
    out.verdict = Verdict::Unsupported;
    out.reason = "branch set does not split over Q(z)";
    return out;
  }
  // x1 = A(x2), so A carries R2 onto R1.
  const Transporter<RatFunc> T = opts.parallel ? transporter(*M2.roots, *M1.roots, opts.max_candidates)
                                               : transporter_serial(*M2.roots, *M1.roots, opts.max_candidates);
  out.candidates = T.candidates;
  out.transporter_size = T.maps.size();
  out.truncated = T.truncated;
  for (const auto& A : T.maps) {
    if (auto iso = conjugating_lift(A, M1, M2)) {
      out.verdict = Verdict::Yes;
      out.witness = std::move(iso);
      out.reason = "Moebius map on the branch sets conjugates the derivations";
      return out;
    }
  }
  if (T.truncated) {
    out.verdict = Verdict::NotFoundOverQ;
    out.reason = "candidate cap reached before the search finished";
  } else if (T.maps.empty()) {
    out.verdict = Verdict::CertifiedNo;
    out.reason = "no Moebius map carries one branch set onto the other";
  } else {
    out.verdict = Verdict::CertifiedNo;
    out.reason = "none of the " + std::to_string(T.maps.size()) + " branch-set maps conjugates the derivations";
  }
  return out;
}

EquivResult strict_equiv_hyper(const DiffEq& e1, const DiffEq& e2, const EquivOptions& opts) {
  return strict_equiv_hyper(hyperelliptic_model(e1), hyperelliptic_model(e2), opts);
}

AutonomyResult autonomous_test_hyper(const HyperModel& M) {
  AutonomyResult out;
  if (!M.roots) {
    out.verdict = Verdict::Unsupported;
    out.reason = "branch set does not split over Q(z)";
    return out;
  }
  const auto A = semi_autonomous_test(*M.roots);
  if (!A) {
    out.verdict = Verdict::CertifiedNo;
    out.reason = "not semi-autonomous: a cross-ratio of the branch set depends on z";
    return out;
  }
  out.normalizer = A;
  const Moebius<RatFunc> B = A->inverse();
  const int g = M.genus;
  const RFPoly bot = linear(B.c(), B.d());
  const RFPoly moved = homogenize(M.P, 2 * g + 2, linear(B.a(), B.b()), bot);
  out.lambda_sq = moved.lc();
  const RFPoly P0 = moved.scaled(RatFunc(1) / out.lambda_sq);
  if (!z_free(BiRat(P0))) throw std::logic_error("normalized branch polynomial depends on z");
  const HyperElemZ dxt = M.curve().derive({A->as_function(), BiRat()}, M.dx);
  const BiRat E0 = substitute(dxt.e0, B), E1 = substitute(dxt.e1, B);
  const BiRat G = E1 * E1 * BiRat(out.lambda_sq) / BiRat(bot.pow(static_cast<unsigned>(2 * g + 2)));
  if (!z_free(E0) || !z_free(G)) {
    out.verdict = Verdict::CertifiedNo;
    out.reason = "D(x) depends on z after normalizing the branch set";
    return out;
  }
  // G = c H^2 with H in Q(x); then y^ = sqrt(c) y~ satisfies y^2 = c P0.
  const QFunc Gq = to_q(G);
  Rat c(1);
  QFunc H;
  if (!Gq.is_zero()) {
    c = Gq.num().lc() / Gq.den().lc();
    auto root = exact_sqrt(Gq / QFunc(c));
    if (!root) throw std::logic_error("derivation weight is not a square");
    H = *root;
  }
  out.pair = hyper_pair(to_upoly(P0).scaled(c), HyperElemQ{to_q(E0), H}).hyper();
  out.verdict = Verdict::Yes;
  out.reason = "D(x) lies in Q(x, y) after normalizing the branch set";
  return out;
}

AutonomyResult autonomous_test_hyper(const DiffEq& e) { return autonomous_test_hyper(hyperelliptic_model(e)); }

const char* necessary_name(Necessary n) {
  return n == Necessary::ObstructionFound ? "obstruction-found" : "inconclusive";
}

EllipticCheck elliptic_necessary(const DiffEq& e1, const DiffEq& e2) {
  EllipticCheck out;
  out.j1 = j_invariant(e1);
  out.j2 = j_invariant(e2);
  out.result = out.j1 == out.j2 ? Necessary::Inconclusive : Necessary::ObstructionFound;
  return out;
}

EllipticCheck elliptic_semi_autonomous_necessary(const DiffEq& e) {
  EllipticCheck out;
  out.j1 = j_invariant(e);
  out.j2 = out.j1;
  out.result = out.j1.is_constant() ? Necessary::Inconclusive : Necessary::ObstructionFound;
  return out;
}

}  // namespace odeq
