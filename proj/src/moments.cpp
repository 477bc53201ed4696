#include "subseq/moments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "subseq/count.hpp"
#include "subseq/errors.hpp"

namespace subseq {

namespace {

ExactRational binom_q(std::uint64_t n, std::uint64_t k) { return ExactRational(binomial(n, k)); }

ExactRational inverse_power(std::uint32_t a, std::uint64_t e) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), a, e);
  return ExactRational(mpz_class(1), den);
}

void check_alphabet(std::uint32_t a) {
  if (a == 0) throw InputError("alphabet size must be positive");
}

}  // namespace

ProbVector::ProbVector(std::vector<ExactRational> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InputError("probability vector is empty");
  ExactRational total;
  for (const ExactRational& p : probs_) {
    if (p.sign() < 0) throw InputError("negative probability " + p.to_string());
    total += p;
    collision_ += p * p;
  }
  if (total != ExactRational(1)) throw InputError("probabilities sum to " + total.to_string() + ", not 1");
}

ProbVector ProbVector::uniform(std::uint32_t alphabet_size) {
  check_alphabet(alphabet_size);
  return ProbVector(std::vector<ExactRational>(alphabet_size, ExactRational(1, alphabet_size)));
}

ProbVector ProbVector::parse(std::span<const std::string> entries) {
  std::vector<ExactRational> probs;
  probs.reserve(entries.size());
  for (const std::string& e : entries) probs.push_back(ExactRational::parse(e));
  return ProbVector(std::move(probs));
}

bool ProbVector::is_uniform() const {
  return std::all_of(probs_.begin(), probs_.end(), [&](const ExactRational& p) { return p == probs_.front(); });
}

ExactRational expected_count_k(std::uint64_t n, std::uint64_t k, const ProbVector& dist) {
  if (k == 0) throw InputError("k must be at least 1");
  if (k > n) return ExactRational();
  const ExactRational c = binom_q(n, k);
  return c * c * dist.collision().pow(static_cast<unsigned>(k));
}

ExactRational expected_count_k(std::uint64_t n, std::uint64_t k, std::uint32_t alphabet_size) {
  check_alphabet(alphabet_size);
  if (k == 0) throw InputError("k must be at least 1");
  if (k > n) return ExactRational();
  const ExactRational c = binom_q(n, k);
  return c * c * inverse_power(alphabet_size, k);
}

ExactRational expected_total(std::uint64_t n, const ProbVector& dist) {
  ExactRational total;
  ExactRational q_pow = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    q_pow *= dist.collision();
    const ExactRational c = binom_q(n, k);
    total += c * c * q_pow;
  }
  return total;
}

ExactRational expected_total(std::uint64_t n, std::uint32_t alphabet_size) {
  check_alphabet(alphabet_size);
  // Common denominator a^n: sum_k C(n,k)^2 a^{n-k} / a^n.
  mpz_class num = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    mpz_class c = binomial(n, k);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), alphabet_size, n - k);
    num += c * c * scale;
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), alphabet_size, n);
  return ExactRational(num, den);
}

MomentBounds second_moment_bounds(std::uint64_t n, std::uint64_t k, std::uint32_t alphabet_size) {
  check_alphabet(alphabet_size);
  if (k == 0 || k > n) throw InputError("second_moment_bounds requires 1 <= k <= n");
  const ExactRational mean = expected_count_k(n, k, alphabet_size);
  ExactRational sum;
  for (std::uint64_t j = 0; j <= k; ++j) {
    const ExactRational term = binom_q(n - k, j) * binom_q(n - j, k - j);
    sum += term * term * inverse_power(alphabet_size, j);
  }
  return MomentBounds{mean * mean, mean * sum};
}

ExhaustiveMoments exhaustive_moments(std::size_t n, std::uint32_t alphabet_size, std::uint64_t budget) {
  check_alphabet(alphabet_size);
  mpz_class words;
  mpz_ui_pow_ui(words.get_mpz_t(), alphabet_size, n);
  const mpz_class pairs = words * words;
  if (pairs > mpz_class(std::to_string(budget))) {
    throw BudgetError("exhaustive moments need " + pairs.get_str() + " word pairs, budget is " +
                      std::to_string(budget));
  }
  const std::uint64_t word_count = words.get_ui();
  std::vector<Sequence> all;
  all.reserve(word_count);
  for (std::uint64_t w = 0; w < word_count; ++w) all.push_back(word_from_index(w, n, alphabet_size));

  std::vector<mpz_class> sum(n), sum_sq(n);
  for (const Sequence& x : all) {
    for (const Sequence& y : all) {
      const std::vector<BigCount> levels = count_by_level(x, y);
      for (std::size_t l = 0; l < levels.size(); ++l) {
        const mpz_class& v = levels[l].value();
        sum[l] += v;
        sum_sq[l] += v * v;
      }
    }
  }
  ExhaustiveMoments out;
  for (std::size_t l = 0; l < n; ++l) {
    out.first.emplace_back(sum[l], pairs);
    out.second.emplace_back(sum_sq[l], pairs);
  }
  return out;
}

ExactRational second_moment_exhaustive(std::size_t n, std::size_t k, std::uint32_t alphabet_size,
                                       std::uint64_t budget) {
  if (k == 0) throw InputError("k must be at least 1");
  ExhaustiveMoments m = exhaustive_moments(n, alphabet_size, budget);
  if (k > n) return ExactRational();
  return m.second[k - 1];
}

bool majorizes(const ProbVector& p, const ProbVector& q) {
  std::vector<ExactRational> a(p.probs().begin(), p.probs().end());
  std::vector<ExactRational> b(q.probs().begin(), q.probs().end());
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len);
  b.resize(len);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  ExactRational sa, sb;
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

ExactRational upper_asymptote_coefficient(std::uint64_t k, std::uint32_t alphabet_size) {
  check_alphabet(alphabet_size);
  auto factorial = [](std::uint64_t m) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), m);
    return ExactRational(f);
  };
  ExactRational sum;
  for (std::uint64_t j = 0; j <= k; ++j) {
    const ExactRational d = factorial(j) * factorial(k - j);
    sum += ExactRational(1) / (d * d) * inverse_power(alphabet_size, j);
  }
  const ExactRational kf = factorial(k);
  return sum / (kf * kf) * inverse_power(alphabet_size, k);
}

LogReal bound_asymptote(double n, std::uint64_t k, std::uint32_t alphabet_size, BoundSide which) {
  check_alphabet(alphabet_size);
  if (k == 0 || static_cast<double>(k) > n) throw InputError("bound_asymptote requires 1 <= k <= n");
  const double kd = static_cast<double>(k);
  const double growth = 4.0 * kd * std::log(n);
  if (which == BoundSide::lower) {
    return LogReal::from_log(growth - 4.0 * std::lgamma(kd + 1.0) - 2.0 * kd * std::log(alphabet_size));
  }
  return LogReal::from_log(growth + upper_asymptote_coefficient(k, alphabet_size).log());
}

}  // namespace subseq
