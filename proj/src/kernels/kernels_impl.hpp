#pragma once

#include <cstddef>
#include <cstdint>

#include "subseq/sequence.hpp"

namespace subseq::kernels::detail {

void accumulate_row_scalar(const Symbol* y, Symbol c, const std::uint64_t* lower, std::uint64_t* out,
                           std::size_t len, std::uint64_t p);

#if defined(SUBSEQ_WITH_AVX2)
void accumulate_row_avx2(const Symbol* y, Symbol c, const std::uint64_t* lower, std::uint64_t* out,
                         std::size_t len, std::uint64_t p);
#endif

}  // namespace subseq::kernels::detail
