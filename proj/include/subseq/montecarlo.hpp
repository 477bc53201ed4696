#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "subseq/bignum.hpp"
#include "subseq/moments.hpp"
#include "subseq/rng.hpp"
#include "subseq/sequence.hpp"

namespace subseq {

/// Draws letters from a ProbVector by exact inversion of its cumulative
/// distribution on one 53-bit uniform integer u per letter: the letter is
/// the first j with u < ceil(2^53 (p_1 + ... + p_j)). Uniform vectors use
/// RngStream::below instead.
class LetterSampler {
 public:
  explicit LetterSampler(const ProbVector& dist);

  Symbol draw(RngStream& rng) const;
  std::uint32_t alphabet_size() const noexcept { return alphabet_size_; }

 private:
  std::uint32_t alphabet_size_;
  bool uniform_;
  std::vector<std::uint64_t> thresholds_;
};

Sequence sample_word(std::size_t n, const LetterSampler& sampler, RngStream& rng);
Sequence sample_word(std::size_t n, const ProbVector& dist, RngStream& rng);

/// Standard normal CDF, computed as erfc(-x / sqrt 2) / 2 with the C
/// library's erfc. Absolute error stays below 1e-15 across the real line.
double normal_cdf(double x);

/// sup_x |F_N(x) - Phi(x)| for the empirical CDF F_N of `samples`.
/// Throws InputError for an empty list.
double kolmogorov_distance(std::span<const double> samples);

struct HistogramBin {
  double lower = 0;
  double upper = 0;
  std::uint64_t count = 0;
};

/// Fixed bins of the standardized samples: 16 bins of width 1/2 on [-4, 4).
/// Values outside are clamped into the first or last bin.
std::vector<HistogramBin> standardized_histogram(std::span<const double> z);

struct SimulationConfig {
  std::size_t n = 0;
  std::size_t k = 1;
  ProbVector dist = ProbVector::uniform(2);
  std::uint64_t num_samples = 0;
  std::uint64_t seed = 0;
  /// Worker threads; the report does not depend on it.
  std::size_t parallelism = 1;
  /// Replica r reads RngStream(seed, stream_offset + r).
  std::uint64_t stream_offset = 0;
};

struct SimulationReport {
  std::size_t n = 0;
  std::size_t k = 0;
  ProbVector dist = ProbVector::uniform(2);
  std::uint64_t num_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_offset = 0;
  double sample_mean = 0;
  /// Unbiased (N - 1 denominator).
  double sample_variance = 0;
  /// Distance of the standardized sample to the standard normal.
  double kolmogorov_distance = 0;
  std::vector<HistogramBin> histogram;
  ExactRational theoretical_mean;
};

/// Samples num_samples independent word pairs, counts T_{n,k} for each and
/// standardizes by the sample mean and sample standard deviation.
///
/// Replica r draws x then y from its own stream and writes slot r; the
/// summary is reduced in replica order, so the report is bit-identical for
/// every parallelism. Counts are shifted by floor(E[T_{n,k}]) before the
/// (correctly rounded) conversion to double.
///
/// Throws InputError for num_samples < 2 or k == 0 and DegenerateError when
/// every sample is equal.
SimulationReport simulate(const SimulationConfig& config);

struct TrendPoint {
  std::size_t n = 0;
  double kolmogorov_distance = 0;
};

/// One simulate() per n; entry i uses stream_offset = i * num_samples so no
/// two runs share a stream. n_list must be strictly increasing with at least
/// two entries.
std::vector<TrendPoint> clt_trend(std::span<const std::size_t> n_list, std::size_t k, const ProbVector& dist,
                                  std::uint64_t num_samples, std::uint64_t seed, std::size_t parallelism = 1);

/// True when each distance is at most the previous one plus `slack`.
bool is_decreasing(std::span<const TrendPoint> trend, double slack);

}  // namespace subseq
