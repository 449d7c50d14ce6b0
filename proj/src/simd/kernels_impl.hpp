#pragma once

#include "mvmodal/kernels.hpp"

namespace mvmodal::simd::detail {

#if defined(__x86_64__) || defined(_M_X64)
#define MVMODAL_HAVE_X86_KERNELS 1
const KernelTable& sse2_kernels();
const KernelTable& avx2_kernels();
#else
#define MVMODAL_HAVE_X86_KERNELS 0
#endif

}  // namespace mvmodal::simd::detail
