#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subseq/bignum.hpp"
#include "subseq/log_real.hpp"

/// Exact moments of the k-long common-subsequence count T_{n,k} and of the
/// total T_n for two independent random words of length n.
///
/// Letters are i.i.d. with probabilities p_1..p_a. Each fixed pair of index
/// tuples matches with probability q^k, q = sum_j p_j^2, so
/// E[T_{n,k}] = C(n,k)^2 q^k and E[T_n] = sum_{k=1}^n C(n,k)^2 q^k. All
/// arithmetic is exact; doubles appear only in the log-space asymptotes.
namespace subseq {

/// Default number of word pairs the exhaustive oracles may visit.
inline constexpr std::uint64_t kDefaultWordPairBudget = 1'000'000;

/// Letter distribution on {0, ..., a-1} with exact rational weights.
class ProbVector {
 public:
  /// Throws InputError unless every weight is >= 0 and they sum to exactly 1.
  explicit ProbVector(std::vector<ExactRational> probs);

  static ProbVector uniform(std::uint32_t alphabet_size);
  /// Each entry in any form ExactRational::parse accepts ("1/3", "0.25").
  static ProbVector parse(std::span<const std::string> entries);

  std::span<const ExactRational> probs() const noexcept { return probs_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(probs_.size()); }
  /// q = sum_j p_j^2, the probability that two independent letters agree.
  const ExactRational& collision() const noexcept { return collision_; }
  bool is_uniform() const;

 private:
  std::vector<ExactRational> probs_;
  ExactRational collision_;
};

struct MomentBounds {
  ExactRational lower;
  ExactRational upper;
};

/// C(n,k)^2 q^k; zero when k > n. Throws InputError for k == 0.
ExactRational expected_count_k(std::uint64_t n, std::uint64_t k, const ProbVector& dist);
ExactRational expected_count_k(std::uint64_t n, std::uint64_t k, std::uint32_t alphabet_size);

/// sum_{k=1}^n C(n,k)^2 q^k.
ExactRational expected_total(std::uint64_t n, const ProbVector& dist);
ExactRational expected_total(std::uint64_t n, std::uint32_t alphabet_size);

/// Uniform letters. lower = C(n,k)^4 a^{-2k} (the squared mean);
/// upper = C(n,k)^2 a^{-k} sum_{j=0}^k C(n-k,j)^2 C(n-j,k-j)^2 a^{-j}.
/// Requires 1 <= k <= n.
MomentBounds second_moment_bounds(std::uint64_t n, std::uint64_t k, std::uint32_t alphabet_size);

/// Exact first and second moments of T_{n,k} for every k = 1..n, averaging
/// over all a^{2n} equally likely word pairs. Index k-1 holds level k.
struct ExhaustiveMoments {
  std::vector<ExactRational> first;
  std::vector<ExactRational> second;
};
ExhaustiveMoments exhaustive_moments(std::size_t n, std::uint32_t alphabet_size,
                                     std::uint64_t budget = kDefaultWordPairBudget);

/// E[T_{n,k}^2] by full enumeration. Throws BudgetError when a^{2n} > budget.
ExactRational second_moment_exhaustive(std::size_t n, std::size_t k, std::uint32_t alphabet_size,
                                       std::uint64_t budget = kDefaultWordPairBudget);

/// True iff p majorizes q: after sorting both in decreasing order (shorter
/// one padded with zeros) every partial sum of p is >= that of q.
bool majorizes(const ProbVector& p, const ProbVector& q);

enum class BoundSide { lower, upper };

/// (1/((k!)^2 a^k)) sum_{j=0}^k 1/((j!)^2 ((k-j)!)^2 a^j), the n^{4k}
/// coefficient of the upper bound's leading term.
ExactRational upper_asymptote_coefficient(std::uint64_t k, std::uint32_t alphabet_size);

/// Leading term of a second-moment bound as n grows with k fixed:
/// lower ~ n^{4k} / ((k!)^4 a^{2k}); upper ~ upper_asymptote_coefficient * n^{4k}.
LogReal bound_asymptote(double n, std::uint64_t k, std::uint32_t alphabet_size, BoundSide which);

}  // namespace subseq
