#pragma once

#include <cstdint>

namespace subseq {

/// SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter pushed through a
/// bijective mixer. Used to expand seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();

  /// The output mixer applied to a single value.
  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman and Vigna). Its state is filled from a
/// SplitMix64 stream, which never yields the forbidden all-zero state in
/// practice.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed);
  /// Raw state, for reproducing published test vectors.
  static Xoshiro256StarStar from_state(std::uint64_t s0, std::uint64_t s1, std::uint64_t s2, std::uint64_t s3);

  std::uint64_t next();
  std::uint64_t operator()() { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

 private:
  Xoshiro256StarStar() = default;
  std::uint64_t s_[4] = {};
};

/// A reproducible random stream identified by (seed, stream_index).
///
/// The generator state is seeded from mix(seed ^ mix(stream_index + c)), so
/// different stream indices under one master seed are decorrelated by
/// construction and every platform produces the same bits. All derived
/// draws below are defined bit-exactly in terms of next().
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  std::uint64_t next() { return engine_.next(); }
  /// Top 53 bits of next(), an integer uniform on [0, 2^53).
  std::uint64_t next53() { return next() >> 11; }
  /// next53() * 2^-53, uniform on [0, 1).
  double uniform01();
  /// Uniform on [0, bound) by Lemire's multiply-and-reject method; bound >= 1.
  std::uint32_t below(std::uint32_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  Xoshiro256StarStar engine_;
};

}  // namespace subseq
