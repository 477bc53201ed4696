#include "subseq/log_real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "subseq/errors.hpp"

namespace subseq {

LogReal LogReal::from_log(double ln) {
  if (std::isnan(ln)) throw InputError("LogReal: NaN logarithm");
  LogReal r;
  if (ln == -std::numeric_limits<double>::infinity()) return r;
  r.zero_ = false;
  r.ln_ = ln;
  return r;
}

LogReal LogReal::from_value(double value) {
  if (!(value >= 0.0)) throw InputError("LogReal: negative or NaN value");
  return value == 0.0 ? LogReal() : from_log(std::log(value));
}

double LogReal::log() const noexcept { return zero_ ? -std::numeric_limits<double>::infinity() : ln_; }

double LogReal::value() const noexcept { return zero_ ? 0.0 : std::exp(ln_); }

LogReal LogReal::operator*(const LogReal& o) const {
  if (zero_ || o.zero_) return LogReal();
  return from_log(ln_ + o.ln_);
}

LogReal LogReal::operator/(const LogReal& o) const {
  if (o.zero_) throw InputError("LogReal: division by zero");
  if (zero_) return LogReal();
  return from_log(ln_ - o.ln_);
}

LogReal LogReal::operator+(const LogReal& o) const {
  if (zero_) return o;
  if (o.zero_) return *this;
  const double hi = std::max(ln_, o.ln_);
  const double lo = std::min(ln_, o.ln_);
  return from_log(hi + std::log1p(std::exp(lo - hi)));
}

LogReal LogReal::sum_of_logs(std::span<const double> logs) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : logs) hi = std::max(hi, v);
  if (logs.empty() || hi == -std::numeric_limits<double>::infinity()) return LogReal();
  double acc = 0.0;
  for (double v : logs) acc += std::exp(v - hi);
  return from_log(hi + std::log(acc));
}

}  // namespace subseq
