#include "subseq/bignum.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "subseq/errors.hpp"

namespace subseq {

BigCount::BigCount(std::uint64_t v) {
  // mpz_class has no portable unsigned 64-bit constructor.
  mpz_import(value_.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
}

BigCount::BigCount(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw InputError("BigCount must be nonnegative");
}

BigCount BigCount::parse(std::string_view text) {
  if (text.empty()) throw InputError("empty integer");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("not a nonnegative integer: " + std::string(text));
    }
  }
  return BigCount(mpz_class(std::string(text), 10));
}

std::size_t BigCount::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

double BigCount::to_double() const { return to_double_nearest(value_); }

BigCount& BigCount::operator+=(const BigCount& other) {
  value_ += other.value_;
  return *this;
}

double to_double_nearest(const mpz_class& v) {
  const int s = sgn(v);
  if (s == 0) return 0.0;
  mpz_class mag = abs(v);
  const std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
  if (bits <= 64) {
    std::uint64_t u = 0;
    mpz_export(&u, nullptr, -1, sizeof u, 0, 0, mag.get_mpz_t());
    // Integer-to-double conversion rounds to nearest under the default mode.
    return s * static_cast<double>(u);
  }
  // Keep 63 significant bits plus a sticky bit; the final conversion then
  // rounds exactly as a direct conversion of the full value would.
  const std::size_t shift = bits - 63;
  mpz_class top;
  mpz_fdiv_q_2exp(top.get_mpz_t(), mag.get_mpz_t(), shift);
  std::uint64_t u = 0;
  mpz_export(&u, nullptr, -1, sizeof u, 0, 0, top.get_mpz_t());
  if (mpz_scan1(mag.get_mpz_t(), 0) < shift) u |= 1;
  return s * std::ldexp(static_cast<double>(u), static_cast<int>(shift));
}

double log_of(const mpz_class& v) {
  if (sgn(v) <= 0) throw InputError("log of a nonpositive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (sgn(den) == 0) throw InputError("zero denominator");
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class v) : value_(std::move(v)) {
  if (sgn(value_.get_den()) == 0) throw InputError("zero denominator");
  value_.canonicalize();
}

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InputError("malformed number: " + std::string(whole));
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("malformed number: " + std::string(whole));
    }
  }
  return mpz_class(std::string(s), 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

ExactRational ExactRational::parse(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  mpq_class q;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), whole);
    mpz_class den = parse_integer(text.substr(slash + 1), whole);
    if (sgn(den) == 0) throw InputError("zero denominator: " + std::string(whole));
    q = mpq_class(num, den);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      mpz_class ez = parse_integer(exp_text, whole);
      if (ez > 4096) throw InputError("exponent too large: " + std::string(whole));
      exponent = ez.get_si() * (exp_negative ? -1 : 1);
      text = text.substr(0, e);
    }
    std::string digits;
    long scale = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view int_part = text.substr(0, dot);
      std::string_view frac_part = text.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) throw InputError("malformed number: " + std::string(whole));
      digits = std::string(int_part) + std::string(frac_part);
      scale = static_cast<long>(frac_part.size());
    } else {
      digits = std::string(text);
    }
    mpz_class mant = parse_integer(digits, whole);
    const long net = exponent - scale;
    if (net >= 0) {
      q = mpq_class(mant * pow10(static_cast<unsigned long>(net)));
    } else {
      q = mpq_class(mant, pow10(static_cast<unsigned long>(-net)));
    }
  }
  q.canonicalize();
  if (negative) q = -q;
  return ExactRational(q);
}

double ExactRational::to_double() const {
  if (is_zero()) return 0.0;
  const double lg = std::abs(log());
  if (lg < 700.0) return value_.get_d();
  return sign() * std::exp(log());
}

double ExactRational::log() const {
  if (sign() <= 0) throw InputError("log of a nonpositive rational");
  return log_of(value_.get_num()) - log_of(value_.get_den());
}

ExactRational ExactRational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return ExactRational(num, den);
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace subseq
