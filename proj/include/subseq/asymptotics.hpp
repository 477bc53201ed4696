#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "subseq/log_real.hpp"

/// Growing-alphabet asymptotics of E[T_n] = sum_{k=1}^n C(n,k)^2 a_n^{-k}
/// with a_n = a n^alpha, evaluated entirely in log space.
///
/// The summand peaks near k* = n / (1 + sqrt(a_n)) and is Gaussian there
/// with curvature A_n / n, A_n = (1 + sqrt(a_n))^2 / sqrt(a_n), which gives
/// the master approximation C(n,k*)^2 a_n^{-k*} sqrt(pi n / A_n). Per-regime
/// closed forms follow from expanding C(n,k*) ~ e^kappa n^{k*} / k*!.
namespace subseq::asymptotics {

/// Which closed form applies to a given alpha.
enum class Regime {
  constant,    ///< alpha = 0
  slow,        ///< 0 < alpha < 1/2
  lower_mid,   ///< 1/2 <= alpha < 2/3
  upper_mid,   ///< 2/3 <= alpha < 1
  linear,      ///< alpha = 1
  fast,        ///< 1 < alpha < 2
};

std::string_view regime_name(Regime r);

/// Throws DomainError unless 0 <= alpha < 2.
Regime regime_for(double alpha);

struct RegimeParams {
  double n = 0;
  double a = 0;
  double alpha = 0;
  double a_n = 0;     ///< a n^alpha
  double k_star = 0;  ///< n / (1 + sqrt(a_n))
  double big_a = 0;   ///< (1 + sqrt(a_n))^2 / sqrt(a_n)
  Regime regime = Regime::constant;
  /// Exponent correcting C(n,k*) against n^{k*}/k*!; absent for alpha = 0,
  /// where the closed form does not go through it. The o(1) of the slow
  /// regime is dropped.
  std::optional<double> kappa;
};

/// Throws DomainError for n < 1, a <= 0, or alpha outside [0, 2).
RegimeParams make_params(double n, double a, double alpha);

/// ln C(n, k) through log-gamma; k may be any real in [0, n].
double log_binomial(double n, double k);

/// ln of sum_{k=1}^n C(n,k)^2 a_n^{-k}, summed term by term with a
/// max-anchored log-sum-exp. Serves as the reference value where exact
/// rationals would be too large.
LogReal exact_log_expected_total(std::uint64_t n, double a_n);

/// C(n,k*)^2 a_n^{-k*} sqrt(pi n / A_n), binomial at real k*.
LogReal master_approx(double n, double a_n);

/// The closed form for the regime selected by alpha.
LogReal regime_formula(double n, double a, double alpha);

/// sqrt[4](a_n) / (2 sqrt(pi n)) e^{2 kappa} e^{2 k*} (1 + 1/sqrt(a_n))^{2 k*},
/// the form every regime reduces to after Stirling on k*!.
LogReal stirling_form(const RegimeParams& params, double kappa);

/// The kappa that makes C(n,k*) = e^kappa n^{k*} / k*! exact at real k*.
double kappa_exact(double n, double a_n);

/// Regime-specific asymptotic for C(n, k*).
LogReal binom_kstar_approx(double n, double a, double alpha);

/// (1 + 1/sqrt(a_n))^{2n/(1+sqrt(a_n))} / e^{2n/(a_n + sqrt(a_n))}.
/// Throws DomainError unless 2/3 < alpha < 2.
double lemma_ratio(double n, double a, double alpha);

/// E[T_n] asymptotic for two uniform random permutations of length n:
/// n^{-1/4} e^{2 sqrt(n)} / (2 sqrt(pi e)).
LogReal permutation_reference(double n);

/// Exact shape of k -> C(n,k)^2 a^{-k} over k = 1..n for an integer a.
struct SummandProfile {
  std::size_t argmax = 0;  ///< smallest maximizing k
  std::size_t maximizers = 0;
  bool unimodal = false;   ///< nondecreasing then nonincreasing
};
SummandProfile summand_profile(std::uint64_t n, std::uint32_t a_n);

}  // namespace subseq::asymptotics
