// Parallel vs serial: transporter triple enumeration and the genus 0 pair
// triple search. Usage: bench_transporter [reps]

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>

#include "odeq/equivalence.hpp"

using namespace odeq;

namespace {

double best_ms(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, size_t work, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(34) << name << std::right << std::setw(8) << work << std::setw(12)
            << std::fixed << std::setprecision(2) << serial << std::setw(12) << parallel << std::setw(9)
            << serial / parallel << "x" << std::setw(6) << (same ? "ok" : "DIFF") << "\n";
}

RootSet<Rat> constant_set(int n) {
  // 0, 1, inf, -1, 2, 1/2, -2, -1/2, 3, 1/3, ...
  RootSet<Rat> R{Rat(0), Rat(1), ProjPoint<Rat>::infinity(), Rat(-1)};
  for (long k = 2; static_cast<int>(R.size()) < n; ++k) {
    for (Rat r : {Rat(k), Rat(1) / Rat(k), Rat(-k), Rat(-1) / Rat(k)})
      if (static_cast<int>(R.size()) < n) R.push_back(r);
  }
  return R;
}

RootSet<RatFunc> scaled_set(int n) {
  RootSet<RatFunc> R;
  for (int j = 1; j <= n; ++j) R.push_back(RatFunc(j) * z_var());
  return R;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::cout << "threads " << omp_get_max_threads() << ", best of " << reps << "\n";
  std::cout << std::left << std::setw(34) << "case" << std::right << std::setw(8) << "triples" << std::setw(12)
            << "serial ms" << std::setw(12) << "omp ms" << std::setw(10) << "speedup" << std::setw(6) << ""
            << "\n";

  for (int n : {8, 12, 16, 20}) {
    const RootSet<Rat> R = constant_set(n);
    Transporter<Rat> s, p;
    const double ts = best_ms(reps, [&] { s = transporter_serial(R, R); });
    const double tp = best_ms(reps, [&] { p = transporter(R, R); });
    row("stabilizer, |R| = " + std::to_string(n) + " over Q", s.candidates, ts, tp, s.maps == p.maps);
  }
  for (int n : {6, 8, 10}) {
    const RootSet<RatFunc> R1 = scaled_set(n);
    RootSet<RatFunc> R2;
    const Moebius<RatFunc> m(RatFunc(1), RatFunc(0), RatFunc(1), z_var());
    for (const auto& r : R1) R2.push_back(m(r));
    Transporter<RatFunc> s, p;
    const double ts = best_ms(reps, [&] { s = transporter_serial(R1, R2); });
    const double tp = best_ms(reps, [&] { p = transporter(R1, R2); });
    row("j z moved, |R| = " + std::to_string(n) + " over Q(z)", s.candidates, ts, tp, s.maps == p.maps);
  }

  const QFunc v = QFunc::var();
  for (int k : {6, 9, 12}) {
    // Simple zeros at 1..k; no match, so every triple is examined.
    QFunc h1(1), h2(1);
    for (int j = 1; j <= k; ++j) {
      h1 = h1 * (v - QFunc(j));
      h2 = h2 * (v - QFunc(j == k ? k + 1 : j));
    }
    const Genus0Pair p1 = genus0_pair(h1).genus0(), p2 = genus0_pair(h2).genus0();
    Genus0Equivalence s, p;
    const double ts = best_ms(reps, [&] { s = pair_equivalent_genus0_serial(p1, p2); });
    const double tp = best_ms(reps, [&] { p = pair_equivalent_genus0(p1, p2); });
    const size_t triples = static_cast<size_t>(k) * (k - 1) * (k - 2);
    row("genus 0 pair, " + std::to_string(k) + " zeros", triples, ts, tp,
        s.verdict == p.verdict && s.witness == p.witness);
  }
}
