#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "subseq/sequence.hpp"

/// Data-parallel inner loops of the leveled counting DP.
///
/// Every kernel works on residues modulo a prime p < 2^62, so sums of two
/// residues never overflow a signed 64-bit lane. Each kernel has a scalar
/// reference implementation and, where the CPU allows it, vectorized
/// variants that must produce bit-identical output.
namespace subseq::kernels {

enum class Backend { scalar, avx2 };

/// Largest modulus the kernels accept (exclusive).
inline constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 62;

std::string_view backend_name(Backend b);

/// True when `b` is compiled in and the running CPU supports it.
bool backend_supported(Backend b);

std::vector<Backend> supported_backends();

/// The fastest supported backend, unless SUBSEQ_KERNEL=scalar|avx2 says otherwise.
/// Decided once per process.
Backend default_backend();

/// One matched-row step of the prefix-count recurrence.
///
/// For t = 0..len-1, with acc running from 0:
///   acc    = (acc + (y[t] == c ? lower[t] : 0)) mod p
///   out[t] = (out[t] + acc) mod p
///
/// `lower` holds the previous level's prefix counts of the previous row,
/// shifted by one column; `out` is the current level's row. All inputs must
/// already be reduced modulo p.
void accumulate_row(Backend b, std::span<const Symbol> y, Symbol c, std::span<const std::uint64_t> lower,
                    std::span<std::uint64_t> out, std::uint64_t p);

}  // namespace subseq::kernels
