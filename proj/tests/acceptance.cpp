// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "subseq/asymptotics.hpp"
#include "subseq/bignum.hpp"
#include "subseq/count.hpp"
#include "subseq/moments.hpp"
#include "subseq/montecarlo.hpp"
#include "subseq/sequence.hpp"

using namespace subseq;
namespace asy = subseq::asymptotics;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = seconds_since(start);
  const bool in_time = elapsed < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %2d %s: %s; %.2f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              elapsed, limit_s, in_time ? "" : " TIME LIMIT EXCEEDED");
  std::fflush(stdout);
}

void info(const std::string& line) {
  std::printf("       info: %s\n", line.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

Sequence random_word(std::mt19937_64& gen, std::size_t n, std::uint32_t a) {
  std::uniform_int_distribution<std::uint32_t> pick(0, a - 1);
  std::vector<Symbol> s(n);
  for (Symbol& v : s) v = pick(gen);
  return Sequence(std::move(s), a);
}

ProbVector random_dist(std::mt19937_64& gen, std::uint32_t a) {
  std::vector<long> w(a);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (long& v : w) {
      v = static_cast<long>(gen() % 25);
      total += v;
    }
  }
  std::vector<ExactRational> p;
  for (long v : w) p.emplace_back(mpz_class(v), mpz_class(total));
  return ProbVector(std::move(p));
}

// ---- 1 ---------------------------------------------------------------------

Outcome oracle_equivalence() {
  std::uint64_t checks = 0, mismatches = 0;
  for (std::size_t nx = 0; nx <= 5; ++nx) {
    for (std::size_t ny = 0; ny <= 5; ++ny) {
      for (std::uint64_t ix = 0; ix < (std::uint64_t{1} << nx); ++ix) {
        const Sequence x = word_from_index(ix, nx, 2);
        for (std::uint64_t iy = 0; iy < (std::uint64_t{1} << ny); ++iy) {
          const Sequence y = word_from_index(iy, ny, 2);
          for (std::size_t k = 1; k <= std::max<std::size_t>(nx, ny) + 1; ++k) {
            ++checks;
            if (count_k(x, y, k) != count_k_bruteforce(x, y, k)) ++mismatches;
          }
        }
      }
    }
  }
  std::mt19937_64 gen(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t a = 2 + static_cast<std::uint32_t>(gen() % 3);
    const Sequence x = random_word(gen, 6 + gen() % 3, a);
    const Sequence y = random_word(gen, 6 + gen() % 3, a);
    for (std::size_t k = 1; k <= 9; ++k) {
      ++checks;
      if (count_k(x, y, k) != count_k_bruteforce(x, y, k)) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(checks) + " comparisons, " + std::to_string(mismatches) + " mismatches"};
}

// ---- 2 ---------------------------------------------------------------------

Outcome cross_engine() {
  std::mt19937_64 gen(777);
  int mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t a = 2 + static_cast<std::uint32_t>(gen() % 5);
    const Sequence x = random_word(gen, gen() % 61, a);
    const Sequence y = random_word(gen, gen() % 61, a);
    BigCount sum;
    for (const BigCount& c : count_by_level(x, y)) sum += c;
    const BigCount all = count_all(x, y);
    const BigCount direct = count_all_direct(x, y);
    if (!(all == direct && direct == sum)) ++mismatches;
  }
  return {mismatches == 0, "500 instances, " + std::to_string(mismatches) + " mismatches"};
}

// ---- 3 ---------------------------------------------------------------------

Outcome expectation_formula() {
  int checked = 0, mismatches = 0;
  for (std::uint32_t a : {2u, 3u}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const ExhaustiveMoments m = exhaustive_moments(n, a);
      for (std::size_t k = 1; k <= n; ++k) {
        ++checked;
        if (m.first[k - 1] != expected_count_k(n, k, a)) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(checked) + " (n,k,a) triples, " + std::to_string(mismatches) + " mismatches"};
}

// ---- 4 ---------------------------------------------------------------------

Outcome second_moment_bounds_hold() {
  int checked = 0, violations = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const ExhaustiveMoments m = exhaustive_moments(n, 2);
    for (std::size_t k = 1; k <= n; ++k) {
      ++checked;
      const MomentBounds b = second_moment_bounds(n, k, 2);
      const ExactRational mean = expected_count_k(n, k, 2);
      const ExactRational& second = m.second[k - 1];
      if (!(b.lower <= second && second <= b.upper && b.lower == mean * mean)) ++violations;
    }
  }
  const ExactRational spot = second_moment_exhaustive(6, 3, 2);
  const bool spot_ok = spot == exhaustive_moments(6, 2).second[2];
  return {violations == 0 && spot_ok,
          std::to_string(checked) + " (n,k) pairs, " + std::to_string(violations) + " violations"};
}

// ---- 5 ---------------------------------------------------------------------

Outcome schur_convexity() {
  std::mt19937_64 gen(5150);
  int pairs = 0, violations = 0;
  while (pairs < 100) {
    ProbVector p = random_dist(gen, 3);
    ProbVector q = random_dist(gen, 3);
    if (!majorizes(p, q)) {
      if (!majorizes(q, p)) continue;
      std::swap(p, q);
    }
    ++pairs;
    if (expected_total(5, p) < expected_total(5, q)) ++violations;
    for (std::uint64_t k = 1; k <= 5; ++k)
      if (expected_count_k(5, k, p) < expected_count_k(5, k, q)) ++violations;
  }
  const ExactRational uniform_value = expected_total(5, 3);
  int below_uniform = 0;
  for (int trial = 0; trial < 1000; ++trial)
    if (expected_total(5, random_dist(gen, 3)) < uniform_value) ++below_uniform;
  return {violations == 0 && below_uniform == 0,
          "100 comparable pairs, " + std::to_string(violations) + " order violations; 1000 random p, " +
              std::to_string(below_uniform) + " below uniform"};
}

// ---- 6 ---------------------------------------------------------------------

Outcome clt() {
  constexpr std::uint64_t kSamples = 20000;
  constexpr double kSlack = 0.01;
  constexpr double kFinal = 0.06;
  const std::vector<std::size_t> ns = {16, 32, 64};
  const std::uint64_t seeds[] = {1, 2, 3, 4, 5};
  std::vector<bool> verdicts;
  std::string detail;
  for (std::uint64_t seed : seeds) {
    const auto trend = clt_trend(ns, 2, ProbVector::uniform(2), kSamples, seed);
    const bool ok = is_decreasing(trend, kSlack) && trend.back().kolmogorov_distance < kFinal;
    verdicts.push_back(ok);
    detail += "seed " + std::to_string(seed) + ": d_K =";
    for (const auto& t : trend) detail += fmt(" %.4f", t.kolmogorov_distance);
    detail += ok ? " ok; " : " fail; ";
  }
  const bool stable = std::all_of(verdicts.begin(), verdicts.end(), [&](bool v) { return v == verdicts.front(); });
  const bool all_ok = std::all_of(verdicts.begin(), verdicts.end(), [](bool v) { return v; });
  detail += stable ? "verdict stable across seeds" : "verdict differs across seeds";
  return {all_ok && stable, detail};
}

void clt_diagnostics() {
  const std::vector<std::size_t> ns = {16, 32, 64};
  const std::vector<ExactRational> skew = {ExactRational(mpz_class(7), mpz_class(10)),
                                           ExactRational(mpz_class(3), mpz_class(10))};
  std::string line = "non-uniform letters (7/10, 3/10), k = 2: d_K =";
  for (const auto& t : clt_trend(ns, 2, ProbVector(skew), 20000, 1)) line += fmt(" %.4f", t.kolmogorov_distance);
  info(line);
  line = "uniform a = 4, k = 1: d_K =";
  for (const auto& t : clt_trend(ns, 1, ProbVector::uniform(4), 20000, 1)) line += fmt(" %.4f", t.kolmogorov_distance);
  info(line);
}

// ---- 7 ---------------------------------------------------------------------

Outcome asymptotics_suite() {
  bool ok = true;
  std::string detail;
  struct Pair {
    double a, alpha;
  };
  for (const Pair pr : {Pair{2, 0}, Pair{1, 1}, Pair{2, 1.5}}) {
    std::vector<double> gaps;
    for (double n : {1e2, 1e3, 1e4}) {
      const double a_n = pr.a * std::pow(n, pr.alpha);
      const double exact = asy::exact_log_expected_total(static_cast<std::uint64_t>(n), a_n).log();
      gaps.push_back(std::fabs(exact - asy::master_approx(n, a_n).log()));
    }
    const bool decreasing = gaps[1] < gaps[0] && gaps[2] < gaps[1];
    ok = ok && decreasing;
    detail += fmt("(a=%g", pr.a) + fmt(", alpha=%g) gaps", pr.alpha) + fmt(" %.2e", gaps[0]) + fmt(" %.2e", gaps[1]) +
              fmt(" %.2e", gaps[2]) + (decreasing ? " decreasing; " : " NOT decreasing; ");
    if (pr.alpha == 0) {
      const double ratio_error = std::fabs(std::expm1(-gaps[2]));
      const double ratio_error_hi = std::fabs(std::expm1(gaps[2]));
      const double err = std::max(ratio_error, ratio_error_hi);
      ok = ok && err < 0.05;
      detail += fmt("|ratio-1| at 1e4 = %.2e; ", err);
    }
  }
  double worst = 0;
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0, 1.5}) {
    const double n = 1e4, a = 2;
    const double master = asy::master_approx(n, a * std::pow(n, alpha)).log();
    const double regime = asy::regime_formula(n, a, alpha).log();
    worst = std::max(worst, std::fabs(regime - master) / std::fabs(master));
  }
  ok = ok && worst <= 0.02;
  detail += fmt("regime vs master worst relative log gap %.2e; ", worst);
  int vandermonde_mismatch = 0;
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const ExactRational want(mpz_class(binomial(2 * n, n) - 1));
    if (expected_total(n, 1) != want) ++vandermonde_mismatch;
    const Sequence c(std::vector<Symbol>(n, 0), 1);
    if (ExactRational(count_all(c, c)) != want) ++vandermonde_mismatch;
  }
  ok = ok && vandermonde_mismatch == 0;
  detail += "C(2n,n)-1 identity mismatches " + std::to_string(vandermonde_mismatch);
  return {ok, detail};
}

// ---- 8 ---------------------------------------------------------------------

Outcome lemma() {
  bool ok = true;
  std::string detail;
  for (double alpha : {0.7, 1.0, 1.5}) {
    const double e3 = std::fabs(asy::lemma_ratio(1e3, 1, alpha) - 1);
    const double e6 = std::fabs(asy::lemma_ratio(1e6, 1, alpha) - 1);
    ok = ok && e6 < e3;
    detail += fmt("alpha=%g: ", alpha) + fmt("%.2e -> ", e3) + fmt("%.2e", e6) + (alpha < 1.5 ? "; " : "");
  }
  return {ok, detail};
}

// ---- 9 ---------------------------------------------------------------------

double time_count_k(const Sequence& x, const Sequence& y, std::size_t k) {
  // Repeat until at least half a second has elapsed and keep the best per-call time.
  double best = 1e300;
  double total = 0;
  int reps = 0;
  while (total < 0.5 || reps < 3) {
    const auto start = Clock::now();
    const BigCount c = count_k(x, y, k);
    const double t = seconds_since(start);
    if (c.is_zero()) std::printf(" ");
    best = std::min(best, t);
    total += t;
    ++reps;
  }
  return best;
}

Outcome performance() {
  std::mt19937_64 gen(99);
  const Sequence x1 = random_word(gen, 1000, 4), y1 = random_word(gen, 1000, 4);
  const Sequence x2 = random_word(gen, 2000, 4), y2 = random_word(gen, 2000, 4);
  time_count_k(x1, y1, 3);  // warm caches and the prime list
  const double t1 = time_count_k(x1, y1, 3);
  const double t2 = time_count_k(x2, y2, 3);
  const double ratio = t2 / t1;
  const bool ratio_ok = ratio >= 3.0 && ratio <= 5.5;

  const Sequence x4 = random_word(gen, 4000, 4), y4 = random_word(gen, 4000, 4);
  const auto start = Clock::now();
  const BigCount total = count_all_direct(x4, y4);
  const double t_direct = seconds_since(start);
  const bool direct_ok = t_direct < 60.0;

  const Sequence x05 = random_word(gen, 2000, 4), y05 = random_word(gen, 2000, 4);
  const auto s2 = Clock::now();
  count_all_direct(x05, y05);
  const double t_direct_half = seconds_since(s2);
  info("count_k exponent log2(t(2000)/t(1000)) = " + fmt("%.3f", std::log2(ratio)) +
       "; count_all_direct exponent log2(t(4000)/t(2000)) = " + fmt("%.3f", std::log2(t_direct / t_direct_half)));

  return {ratio_ok && direct_ok, fmt("k=3 t(1000)=%.4f s", t1) + fmt(", t(2000)=%.4f s", t2) +
                                     fmt(", ratio %.3f", ratio) + fmt("; count_all_direct(4000) %.2f s", t_direct) +
                                     ", total has " + std::to_string(total.bit_length()) + " bits"};
}

// ---- 10 --------------------------------------------------------------------

Outcome unimodality() {
  int checked = 0, failures_here = 0;
  double worst = 0;
  for (std::uint32_t a_n : {2u, 3u, 10u}) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
      ++checked;
      const asy::SummandProfile s = asy::summand_profile(n, a_n);
      const double k_star = static_cast<double>(n) / (1.0 + std::sqrt(static_cast<double>(a_n)));
      const double dist = std::fabs(static_cast<double>(s.argmax) - k_star);
      worst = std::max(worst, dist);
      if (!s.unimodal || dist > 1.0) ++failures_here;
    }
  }
  return {failures_here == 0, std::to_string(checked) + " (n, a_n) cases, " + std::to_string(failures_here) +
                                  " failures, max |argmax - k*| = " + fmt("%.3f", worst)};
}

}  // namespace

int main() {
  std::printf("kernel backend: %s\n", std::string(kernels::backend_name(kernels::default_backend())).c_str());
  report(1, "oracle equivalence", 60, oracle_equivalence);
  report(2, "cross-engine identity", 60, cross_engine);
  report(3, "expectation formula", 120, expectation_formula);
  report(4, "second-moment bounds", 300, second_moment_bounds_hold);
  report(5, "Schur convexity", 60, schur_convexity);
  report(6, "CLT trend", 600, clt);
  clt_diagnostics();
  report(7, "asymptotics", 60, asymptotics_suite);
  report(8, "lemma ratio", 5, lemma);
  report(9, "performance", 600, performance);
  report(10, "unimodality", 10, unimodality);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
