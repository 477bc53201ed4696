#pragma once

#include <span>

namespace subseq {

/// A nonnegative real held as its natural logarithm, so that quantities far
/// outside the double range (e^{2 sqrt(n)} at large n, n^{4k}, ...) can be
/// multiplied, added and compared.
class LogReal {
 public:
  /// Zero.
  LogReal() = default;

  static LogReal zero() { return LogReal(); }
  static LogReal from_log(double ln);
  /// Requires value >= 0.
  static LogReal from_value(double value);

  bool is_zero() const noexcept { return zero_; }
  /// Natural log of the magnitude; -inf for zero.
  double log() const noexcept;
  /// exp(log()); may overflow to +inf.
  double value() const noexcept;

  LogReal operator*(const LogReal& o) const;
  /// Requires a nonzero divisor.
  LogReal operator/(const LogReal& o) const;
  /// Max-anchored log-sum-exp.
  LogReal operator+(const LogReal& o) const;

  /// Sum of exp(logs[i]) without leaving log space.
  static LogReal sum_of_logs(std::span<const double> logs);

 private:
  bool zero_ = true;
  double ln_ = 0.0;
};

}  // namespace subseq
