#include "subseq/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "subseq/count.hpp"
#include "subseq/errors.hpp"

namespace subseq {

LetterSampler::LetterSampler(const ProbVector& dist)
    : alphabet_size_(dist.size()), uniform_(dist.is_uniform()) {
  if (uniform_) return;
  const mpz_class scale = mpz_class(1) << 53;
  ExactRational cumulative;
  thresholds_.reserve(alphabet_size_);
  for (const ExactRational& p : dist.probs()) {
    cumulative += p;
    mpz_class t = cumulative.numerator() * scale;
    mpz_cdiv_q(t.get_mpz_t(), t.get_mpz_t(), cumulative.denominator().get_mpz_t());
    thresholds_.push_back(t.get_ui());
  }
}

Symbol LetterSampler::draw(RngStream& rng) const {
  if (uniform_) return rng.below(alphabet_size_);
  const std::uint64_t u = rng.next53();
  const auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), u);
  return static_cast<Symbol>(it - thresholds_.begin());
}

Sequence sample_word(std::size_t n, const LetterSampler& sampler, RngStream& rng) {
  std::vector<Symbol> symbols(n);
  for (Symbol& s : symbols) s = sampler.draw(rng);
  return Sequence(std::move(symbols), sampler.alphabet_size());
}

Sequence sample_word(std::size_t n, const ProbVector& dist, RngStream& rng) {
  return sample_word(n, LetterSampler(dist), rng);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double kolmogorov_distance(std::span<const double> samples) {
  if (samples.empty()) throw InputError("kolmogorov_distance needs at least one sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double phi = normal_cdf(sorted[i]);
    const double above = static_cast<double>(i + 1) / n - phi;
    const double below = phi - static_cast<double>(i) / n;
    d = std::max({d, above, below});
  }
  return std::min(d, 1.0);
}

std::vector<HistogramBin> standardized_histogram(std::span<const double> z) {
  constexpr int kBins = 16;
  constexpr double kLow = -4.0;
  constexpr double kWidth = 0.5;
  std::vector<HistogramBin> bins(kBins);
  for (int b = 0; b < kBins; ++b) {
    bins[b].lower = kLow + kWidth * b;
    bins[b].upper = kLow + kWidth * (b + 1);
  }
  for (double v : z) {
    const int b = std::clamp(static_cast<int>(std::floor((v - kLow) / kWidth)), 0, kBins - 1);
    ++bins[b].count;
  }
  return bins;
}

SimulationReport simulate(const SimulationConfig& config) {
  if (config.k == 0) throw InputError("k must be at least 1");
  if (config.num_samples < 2) throw InputError("simulate needs at least 2 samples");

  SimulationReport report;
  report.n = config.n;
  report.k = config.k;
  report.dist = config.dist;
  report.num_samples = config.num_samples;
  report.seed = config.seed;
  report.stream_offset = config.stream_offset;
  report.theoretical_mean = expected_count_k(config.n, config.k, config.dist);

  mpz_class shift;
  mpz_fdiv_q(shift.get_mpz_t(), report.theoretical_mean.numerator().get_mpz_t(),
             report.theoretical_mean.denominator().get_mpz_t());

  const LetterSampler sampler(config.dist);
  const std::uint64_t total = config.num_samples;
  std::vector<double> samples(total);

  auto run_block = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t r = begin; r < end; ++r) {
      RngStream rng(config.seed, config.stream_offset + r);
      const Sequence x = sample_word(config.n, sampler, rng);
      const Sequence y = sample_word(config.n, sampler, rng);
      samples[r] = to_double_nearest(count_k(x, y, config.k).value() - shift);
    }
  };

  const std::size_t workers =
      static_cast<std::size_t>(std::clamp<std::uint64_t>(config.parallelism, 1, total));
  if (workers == 1) {
    run_block(0, total);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          run_block(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  const double n = static_cast<double>(total);
  double sum = 0.0;
  for (double s : samples) sum += s;
  const double mean = sum / n;
  double ss = 0.0;
  for (double s : samples) ss += (s - mean) * (s - mean);
  const double variance = ss / (n - 1.0);
  if (!(variance > 0.0)) {
    throw DegenerateError("all sampled counts are equal; T_{n,k} cannot be standardized");
  }

  const double sd = std::sqrt(variance);
  std::vector<double> z(total);
  for (std::uint64_t r = 0; r < total; ++r) z[r] = (samples[r] - mean) / sd;

  report.sample_mean = mean + to_double_nearest(shift);
  report.sample_variance = variance;
  report.kolmogorov_distance = kolmogorov_distance(z);
  report.histogram = standardized_histogram(z);
  return report;
}

std::vector<TrendPoint> clt_trend(std::span<const std::size_t> n_list, std::size_t k, const ProbVector& dist,
                                  std::uint64_t num_samples, std::uint64_t seed, std::size_t parallelism) {
  if (n_list.size() < 2) throw InputError("clt_trend needs at least two lengths");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw InputError("clt_trend lengths must be strictly increasing");
  }
  std::vector<TrendPoint> out;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    SimulationConfig cfg;
    cfg.n = n_list[i];
    cfg.k = k;
    cfg.dist = dist;
    cfg.num_samples = num_samples;
    cfg.seed = seed;
    cfg.parallelism = parallelism;
    cfg.stream_offset = static_cast<std::uint64_t>(i) * num_samples;
    out.push_back({n_list[i], simulate(cfg).kolmogorov_distance});
  }
  return out;
}

bool is_decreasing(std::span<const TrendPoint> trend, double slack) {
  for (std::size_t i = 1; i < trend.size(); ++i) {
    if (trend[i].kolmogorov_distance > trend[i - 1].kolmogorov_distance + slack) return false;
  }
  return true;
}

}  // namespace subseq
