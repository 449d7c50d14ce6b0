#include <emmintrin.h>

#include "kernels_impl.hpp"

namespace mvmodal::simd::detail {
namespace {

struct Sse2 {
  using reg = __m128i;
  static constexpr std::size_t width = 16;
  static constexpr unsigned full_mask = 0xFFFFu;
  static reg load(const std::uint8_t* p) { return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p)); }
  static void store(std::uint8_t* p, reg v) { _mm_storeu_si128(reinterpret_cast<__m128i*>(p), v); }
  static reg set1(std::uint8_t v) { return _mm_set1_epi8(static_cast<char>(v)); }
  static reg sub(reg a, reg b) { return _mm_sub_epi8(a, b); }
  static reg subs(reg a, reg b) { return _mm_subs_epu8(a, b); }
  static reg adds(reg a, reg b) { return _mm_adds_epu8(a, b); }
  static reg min(reg a, reg b) { return _mm_min_epu8(a, b); }
  static reg max(reg a, reg b) { return _mm_max_epu8(a, b); }
  static reg bor(reg a, reg b) { return _mm_or_si128(a, b); }
  static reg band(reg a, reg b) { return _mm_and_si128(a, b); }
  static reg cmpeq(reg a, reg b) { return _mm_cmpeq_epi8(a, b); }
  static unsigned movemask(reg a) { return static_cast<unsigned>(_mm_movemask_epi8(a)); }
};

#include "kernels_loop.hpp"

using L = Loops<Sse2>;
constexpr KernelTable kSse2{Isa::Sse2, L::neg,  L::imp,  L::tmin,     L::tmax,     L::sconj,
                            L::sdisj,  L::iff,  L::coef, L::max_into, L::min_into, L::find_ne};

}  // namespace

const KernelTable& sse2_kernels() { return kSse2; }

}  // namespace mvmodal::simd::detail
