#include "subseq/residue.hpp"

#include <mutex>

#include "subseq/errors.hpp"
#include "subseq/kernels.hpp"

namespace subseq::residue {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime.
  return pow_mod(a, p - 2, p);
}

std::uint64_t mpz_mod_u64(const mpz_class& x, std::uint64_t m) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(x.get_mpz_t(), m);
}

mpz_class from_u64(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a complete witness set below 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> cache;
  std::lock_guard lock(mutex);
  std::uint64_t candidate = cache.empty() ? kernels::kModulusLimit - 1 : cache.back() - 2;
  while (cache.size() < count) {
    if (is_prime(candidate)) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<std::uint64_t> primes_exceeding(const mpz_class& bound) {
  // Every prime is above 2^61, so ceil((bits + 1) / 61) of them always suffice.
  const std::size_t bits = sgn(bound) <= 0 ? 1 : mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::vector<std::uint64_t> pool = primes(bits / 61 + 2);
  std::vector<std::uint64_t> out;
  mpz_class product = 1;
  for (std::uint64_t p : pool) {
    out.push_back(p);
    product *= from_u64(p);
    if (product > bound) return out;
  }
  throw InputError("primes_exceeding: pool too small");  // unreachable
}

mpz_class reconstruct(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli) {
  if (residues.size() != moduli.size() || moduli.empty()) {
    throw InputError("reconstruct: residues and moduli must be nonempty and equally long");
  }
  // Garner's mixed-radix form: x = r0 + m0 (t1 + m1 (t2 + ...)).
  mpz_class x = from_u64(residues[0] % moduli[0]);
  mpz_class product = from_u64(moduli[0]);
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    const std::uint64_t p = moduli[i];
    const std::uint64_t current = mpz_mod_u64(x, p);
    const std::uint64_t target = residues[i] % p;
    const std::uint64_t diff = target >= current ? target - current : target + (p - current);
    const std::uint64_t t = mul_mod(diff, inverse_mod(mpz_mod_u64(product, p), p), p);
    x += product * from_u64(t);
    product *= from_u64(p);
  }
  return x;
}

}  // namespace subseq::residue
