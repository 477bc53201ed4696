#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace subseq {

/// Arbitrary-precision nonnegative integer.
class BigCount {
 public:
  BigCount() = default;
  explicit BigCount(std::uint64_t v);
  /// Throws InputError if `v` is negative.
  explicit BigCount(mpz_class v);

  /// Parses a decimal string of digits.
  static BigCount parse(std::string_view text);

  const mpz_class& value() const noexcept { return value_; }
  std::string to_string() const { return value_.get_str(); }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  std::size_t bit_length() const;

  /// Correctly rounded (round-to-nearest-even) conversion to double.
  double to_double() const;

  BigCount& operator+=(const BigCount& other);
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }

  friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_{0};
};

/// Correctly rounded conversion of a signed big integer to double.
double to_double_nearest(const mpz_class& v);

/// Natural logarithm of a positive big integer, accurate to a few ulps even
/// far outside the double range.
double log_of(const mpz_class& v);

/// Binomial coefficient C(n, k) (zero when k > n).
mpz_class binomial(std::uint64_t n, std::uint64_t k);

/// Reduced ratio of big integers with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long v) : value_(v) {}  // NOLINT: integers convert implicitly
  explicit ExactRational(const mpz_class& v) : value_(v) {}
  explicit ExactRational(const BigCount& v) : value_(v.value()) {}
  /// Throws InputError when `den` is zero.
  ExactRational(const mpz_class& num, const mpz_class& den);
  explicit ExactRational(mpq_class v);

  /// Accepts "7", "-3/4", "0.125", "1e-3" style text and converts exactly.
  static ExactRational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  std::string num_str() const { return value_.get_num().get_str(); }
  std::string den_str() const { return value_.get_den().get_str(); }
  std::string to_string() const { return value_.get_str(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const;
  /// Natural log; requires a positive value.
  double log() const;

  ExactRational pow(unsigned exponent) const;

  ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

}  // namespace subseq
