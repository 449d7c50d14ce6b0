#include <immintrin.h>

#include "kernels_impl.hpp"

namespace mvmodal::simd::detail {
namespace {

struct Avx2 {
  using reg = __m256i;
  static constexpr std::size_t width = 32;
  static constexpr unsigned full_mask = 0xFFFFFFFFu;
  static reg load(const std::uint8_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
  }
  static void store(std::uint8_t* p, reg v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }
  static reg set1(std::uint8_t v) { return _mm256_set1_epi8(static_cast<char>(v)); }
  static reg sub(reg a, reg b) { return _mm256_sub_epi8(a, b); }
  static reg subs(reg a, reg b) { return _mm256_subs_epu8(a, b); }
  static reg adds(reg a, reg b) { return _mm256_adds_epu8(a, b); }
  static reg min(reg a, reg b) { return _mm256_min_epu8(a, b); }
  static reg max(reg a, reg b) { return _mm256_max_epu8(a, b); }
  static reg bor(reg a, reg b) { return _mm256_or_si256(a, b); }
  static reg band(reg a, reg b) { return _mm256_and_si256(a, b); }
  static reg cmpeq(reg a, reg b) { return _mm256_cmpeq_epi8(a, b); }
  static unsigned movemask(reg a) { return static_cast<unsigned>(_mm256_movemask_epi8(a)); }
};

#include "kernels_loop.hpp"

using L = Loops<Avx2>;
constexpr KernelTable kAvx2{Isa::Avx2, L::neg,  L::imp,  L::tmin,     L::tmax,     L::sconj,
                            L::sdisj,  L::iff,  L::coef, L::max_into, L::min_into, L::find_ne};

}  // namespace

const KernelTable& avx2_kernels() { return kAvx2; }

}  // namespace mvmodal::simd::detail
