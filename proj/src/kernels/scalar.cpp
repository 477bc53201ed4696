#include "kernels/kernels_impl.hpp"

namespace subseq::kernels::detail {

namespace {
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
}  // namespace

void accumulate_row_scalar(const Symbol* y, Symbol c, const std::uint64_t* lower, std::uint64_t* out,
                           std::size_t len, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t t = 0; t < len; ++t) {
    if (y[t] == c) acc = add_mod(acc, lower[t], p);
    out[t] = add_mod(out[t], acc, p);
  }
}

}  // namespace subseq::kernels::detail
