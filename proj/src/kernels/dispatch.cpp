#include <cstdlib>
#include <string>

#include "kernels/kernels_impl.hpp"
#include "subseq/errors.hpp"
#include "subseq/kernels.hpp"

namespace subseq::kernels {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2:
#if defined(SUBSEQ_WITH_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Backend> supported_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::avx2}) {
    if (backend_supported(b)) out.push_back(b);
  }
  return out;
}

namespace {
Backend detect_backend() {
  if (const char* forced = std::getenv("SUBSEQ_KERNEL")) {
    const std::string name(forced);
    if (name == "scalar") return Backend::scalar;
    if (name == "avx2" && backend_supported(Backend::avx2)) return Backend::avx2;
  }
  return backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}
}  // namespace

Backend default_backend() {
  static const Backend chosen = detect_backend();
  return chosen;
}

void accumulate_row(Backend b, std::span<const Symbol> y, Symbol c, std::span<const std::uint64_t> lower,
                    std::span<std::uint64_t> out, std::uint64_t p) {
  if (lower.size() < y.size() || out.size() < y.size()) throw InputError("accumulate_row: span too short");
  if (p < 2 || p >= kModulusLimit) throw InputError("accumulate_row: modulus out of range");
  switch (b) {
    case Backend::avx2:
#if defined(SUBSEQ_WITH_AVX2)
      if (backend_supported(Backend::avx2)) {
        detail::accumulate_row_avx2(y.data(), c, lower.data(), out.data(), y.size(), p);
        return;
      }
#endif
      throw InputError("avx2 kernels are not available on this machine");
    case Backend::scalar:
      detail::accumulate_row_scalar(y.data(), c, lower.data(), out.data(), y.size(), p);
      return;
  }
}

}  // namespace subseq::kernels
