#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

/// Residue-number-system support for the exact counting engines: a fixed
/// family of primes just below 2^62 and Chinese-remainder reconstruction.
namespace subseq::residue {

/// Deterministic primality test valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// The first `count` primes strictly below 2^62, in decreasing order.
/// Thread-safe; the list is extended on demand.
std::vector<std::uint64_t> primes(std::size_t count);

/// The shortest prefix of primes() whose product exceeds `bound`.
std::vector<std::uint64_t> primes_exceeding(const mpz_class& bound);

/// The unique x in [0, prod(moduli)) with x = residues[i] (mod moduli[i]).
/// Moduli must be pairwise coprime.
mpz_class reconstruct(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli);

}  // namespace subseq::residue
