#include <immintrin.h>

#include "kernels/kernels_impl.hpp"

namespace subseq::kernels::detail {

namespace {

// Lanes hold residues < p < 2^62, so a + b fits in a signed lane and the
// signed compare is valid.
inline __m256i add_mod(__m256i a, __m256i b, __m256i p, __m256i p_minus_1) {
  const __m256i s = _mm256_add_epi64(a, b);
  const __m256i wrap = _mm256_cmpgt_epi64(s, p_minus_1);
  return _mm256_sub_epi64(s, _mm256_and_si256(wrap, p));
}

}  // namespace

void accumulate_row_avx2(const Symbol* y, Symbol c, const std::uint64_t* lower, std::uint64_t* out,
                         std::size_t len, std::uint64_t p) {
  const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
  const __m256i vp1 = _mm256_set1_epi64x(static_cast<long long>(p - 1));
  const __m256i vc = _mm256_set1_epi64x(static_cast<long long>(c));
  const __m256i zero = _mm256_setzero_si256();
  __m256i carry = zero;

  std::size_t t = 0;
  for (; t + 4 <= len; t += 4) {
    const __m256i ys = _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(y + t)));
    const __m256i hit = _mm256_cmpeq_epi64(ys, vc);
    __m256i e = _mm256_and_si256(hit, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lower + t)));

    // Inclusive scan of the four lanes: shift by one lane, then by two.
    __m256i shifted = _mm256_blend_epi32(_mm256_permute4x64_epi64(e, _MM_SHUFFLE(2, 1, 0, 0)), zero, 0x03);
    e = add_mod(e, shifted, vp, vp1);
    shifted = _mm256_blend_epi32(_mm256_permute4x64_epi64(e, _MM_SHUFFLE(1, 0, 0, 0)), zero, 0x0F);
    e = add_mod(e, shifted, vp, vp1);
    e = add_mod(e, carry, vp, vp1);
    carry = _mm256_permute4x64_epi64(e, _MM_SHUFFLE(3, 3, 3, 3));

    __m256i* dst = reinterpret_cast<__m256i*>(out + t);
    _mm256_storeu_si256(dst, add_mod(_mm256_loadu_si256(dst), e, vp, vp1));
  }

  std::uint64_t acc = static_cast<std::uint64_t>(_mm256_extract_epi64(carry, 0));
  for (; t < len; ++t) {
    if (y[t] == c) {
      acc += lower[t];
      if (acc >= p) acc -= p;
    }
    const std::uint64_t s = out[t] + acc;
    out[t] = s >= p ? s - p : s;
  }
}

}  // namespace subseq::kernels::detail
