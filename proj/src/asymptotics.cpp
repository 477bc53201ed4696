#include "subseq/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "subseq/bignum.hpp"
#include "subseq/errors.hpp"

namespace subseq::asymptotics {

namespace {

constexpr double kPi = std::numbers::pi;

// ln( sqrt[4](a_n) / (2 sqrt(pi n)) ), the prefactor shared by most rows.
double log_prefactor(double n, double a_n) { return 0.25 * std::log(a_n) - std::log(2.0 * std::sqrt(kPi * n)); }

}  // namespace

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::constant: return "alpha=0";
    case Regime::slow: return "(0,1/2)";
    case Regime::lower_mid: return "[1/2,2/3)";
    case Regime::upper_mid: return "[2/3,1)";
    case Regime::linear: return "alpha=1";
    case Regime::fast: return "(1,2)";
  }
  return "unknown";
}

Regime regime_for(double alpha) {
  if (!(alpha >= 0.0) || alpha >= 2.0) throw DomainError("alpha must lie in [0, 2)");
  if (alpha == 0.0) return Regime::constant;
  if (alpha < 0.5) return Regime::slow;
  if (alpha < 2.0 / 3.0) return Regime::lower_mid;
  if (alpha < 1.0) return Regime::upper_mid;
  if (alpha == 1.0) return Regime::linear;
  return Regime::fast;
}

RegimeParams make_params(double n, double a, double alpha) {
  if (!(n >= 1.0)) throw DomainError("n must be at least 1");
  if (!(a > 0.0)) throw DomainError("a must be positive");
  RegimeParams p;
  p.n = n;
  p.a = a;
  p.alpha = alpha;
  p.regime = regime_for(alpha);
  p.a_n = a * std::pow(n, alpha);
  const double root = std::sqrt(p.a_n);
  p.k_star = n / (1.0 + root);
  p.big_a = (1.0 + root) * (1.0 + root) / root;
  const double k = p.k_star;
  switch (p.regime) {
    case Regime::constant: break;
    case Regime::slow:
    case Regime::upper_mid: p.kappa = -k * k / (2.0 * n); break;
    case Regime::lower_mid: p.kappa = -k * k / (2.0 * n) - k * k * k / (6.0 * n * n); break;
    case Regime::linear: p.kappa = -1.0 / (2.0 * a); break;
    case Regime::fast: p.kappa = 0.0; break;
  }
  return p;
}

double log_binomial(double n, double k) {
  if (!(k >= 0.0) || k > n) throw DomainError("log_binomial requires 0 <= k <= n");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

LogReal exact_log_expected_total(std::uint64_t n, double a_n) {
  if (n == 0) throw DomainError("n must be at least 1");
  if (!(a_n > 0.0)) throw DomainError("a_n must be positive");
  const double nd = static_cast<double>(n);
  const double log_a = std::log(a_n);
  const double lg_n = std::lgamma(nd + 1.0);
  std::vector<double> logs(n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double lc = lg_n - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
    logs[k - 1] = 2.0 * lc - kd * log_a;
  }
  return LogReal::sum_of_logs(logs);
}

LogReal master_approx(double n, double a_n) {
  if (!(n >= 1.0)) throw DomainError("n must be at least 1");
  if (!(a_n > 0.0)) throw DomainError("a_n must be positive");
  const double root = std::sqrt(a_n);
  const double k = n / (1.0 + root);
  const double big_a = (1.0 + root) * (1.0 + root) / root;
  return LogReal::from_log(2.0 * log_binomial(n, k) - k * std::log(a_n) + 0.5 * std::log(kPi * n / big_a));
}

LogReal stirling_form(const RegimeParams& p, double kappa) {
  const double k = p.k_star;
  return LogReal::from_log(log_prefactor(p.n, p.a_n) + 2.0 * kappa + 2.0 * k +
                           2.0 * k * std::log1p(1.0 / std::sqrt(p.a_n)));
}

LogReal regime_formula(double n, double a, double alpha) {
  const RegimeParams p = make_params(n, a, alpha);
  const double root_a = std::sqrt(a);
  switch (p.regime) {
    case Regime::constant:
      return LogReal::from_log(0.25 * std::log(a) - std::log(2.0 * std::sqrt(kPi * n)) +
                               (2.0 * n + 1.0) * std::log1p(1.0 / root_a));
    case Regime::slow:
    case Regime::lower_mid:
      return stirling_form(p, *p.kappa);
    case Regime::upper_mid:
      return LogReal::from_log(log_prefactor(n, p.a_n) + (2.0 / root_a) * std::pow(n, 1.0 - alpha / 2.0) -
                               0.5 / (1.0 + std::sqrt(p.a_n)));
    case Regime::linear:
      return LogReal::from_log(0.25 * std::log(a) - std::log(2.0 * std::sqrt(kPi)) + 3.0 / (2.0 * a) -
                               0.25 * std::log(n) + (2.0 / root_a) * std::sqrt(n));
    case Regime::fast:
      return LogReal::from_log(log_prefactor(n, p.a_n) + (2.0 / root_a) * std::pow(n, 1.0 - alpha / 2.0));
  }
  throw DomainError("unhandled regime");
}

double kappa_exact(double n, double a_n) {
  const double k = n / (1.0 + std::sqrt(a_n));
  return log_binomial(n, k) - (k * std::log(n) - std::lgamma(k + 1.0));
}

LogReal binom_kstar_approx(double n, double a, double alpha) {
  const RegimeParams p = make_params(n, a, alpha);
  const double k = p.k_star;
  if (p.regime == Regime::constant) {
    const double root_a = std::sqrt(a);
    return LogReal::from_log((n + 1.0) * std::log1p(root_a) - 0.5 * std::log(2.0 * kPi * n) -
                             (k + 1.0) * std::log(root_a));
  }
  return LogReal::from_log(*p.kappa + k * std::log(n) - std::lgamma(k + 1.0));
}

double lemma_ratio(double n, double a, double alpha) {
  if (!(alpha > 2.0 / 3.0 && alpha < 2.0)) throw DomainError("lemma_ratio requires 2/3 < alpha < 2");
  const RegimeParams p = make_params(n, a, alpha);
  const double root = std::sqrt(p.a_n);
  // Left exponent 2k* ln(1 + 1/root); right exponent 2n/(a_n + root) = 2k*/root.
  const double log_ratio = 2.0 * p.k_star * (std::log1p(1.0 / root) - 1.0 / root);
  return std::exp(log_ratio);
}

LogReal permutation_reference(double n) {
  if (!(n >= 1.0)) throw DomainError("n must be at least 1");
  return LogReal::from_log(-std::log(2.0 * std::sqrt(kPi * std::numbers::e)) - 0.25 * std::log(n) +
                           2.0 * std::sqrt(n));
}

SummandProfile summand_profile(std::uint64_t n, std::uint32_t a_n) {
  if (n == 0 || a_n == 0) throw DomainError("summand_profile requires n >= 1 and a_n >= 1");
  // Common denominator a^n turns every term into the integer C(n,k)^2 a^{n-k}.
  std::vector<mpz_class> terms(n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    mpz_class c = binomial(n, k);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), a_n, n - k);
    terms[k - 1] = c * c * scale;
  }
  SummandProfile out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] > terms[best]) best = i;
  }
  out.argmax = best + 1;
  for (const mpz_class& t : terms) out.maximizers += (t == terms[best]);
  bool descending = false;
  out.unimodal = true;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i] < terms[i - 1]) descending = true;
    if (terms[i] > terms[i - 1] && descending) out.unimodal = false;
  }
  return out;
}

}  // namespace subseq::asymptotics
