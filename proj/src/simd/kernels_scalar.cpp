#include <algorithm>

#include "kernels_impl.hpp"

namespace mvmodal::simd {
namespace {

using u8 = std::uint8_t;

void neg_s(u8 d, const u8* a, u8* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<u8>(d - a[i]);
}

void imp_s(u8 d, const u8* a, const u8* b, u8* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    int v = d - a[i] + b[i];
    out[i] = static_cast<u8>(v > d ? d : v);
  }
}

void tmin_s(u8, const u8* a, const u8* b, u8* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = std::min(a[i], b[i]);
}

void tmax_s(u8, const u8* a, const u8* b, u8* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = std::max(a[i], b[i]);
}

void sconj_s(u8 d, const u8* a, const u8* b, u8* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    int v = a[i] + b[i] - d;
    out[i] = static_cast<u8>(v < 0 ? 0 : v);
  }
}

void sdisj_s(u8 d, const u8* a, const u8* b, u8* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    int v = a[i] + b[i];
    out[i] = static_cast<u8>(v > d ? d : v);
  }
}

void iff_s(u8 d, const u8* a, const u8* b, u8* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    int diff = a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    out[i] = static_cast<u8>(d - diff);
  }
}

void coef_s(u8 d, u8 value, const u8* a, u8* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = a[i] == value ? d : 0;
}

void max_into_s(const u8* a, u8* acc, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) acc[i] = std::max(acc[i], a[i]);
}

void min_into_s(const u8* a, u8* acc, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) acc[i] = std::min(acc[i], a[i]);
}

std::size_t find_ne_s(u8 value, const u8* a, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] != value) return i;
  }
  return len;
}

constexpr KernelTable kScalar{Isa::Scalar, neg_s,  imp_s,      tmin_s,     tmax_s,   sconj_s,
                              sdisj_s,     iff_s,  coef_s,     max_into_s, min_into_s, find_ne_s};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace mvmodal::simd
