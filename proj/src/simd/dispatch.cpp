#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "mvmodal/error.hpp"

namespace mvmodal::simd {
namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
#if MVMODAL_HAVE_X86_KERNELS
    case Isa::Sse2:
      return __builtin_cpu_supports("sse2");
    case Isa::Avx2:
      return __builtin_cpu_supports("avx2");
#else
    default:
      return false;
#endif
  }
  return false;
}

const KernelTable* table_of(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &scalar_kernels();
#if MVMODAL_HAVE_X86_KERNELS
    case Isa::Sse2:
      return &detail::sse2_kernels();
    case Isa::Avx2:
      return &detail::avx2_kernels();
#else
    default:
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* initial_table() {
  if (const char* env = std::getenv("MVMODAL_ISA")) {
    std::string want(env);
    for (Isa isa : supported_isas()) {
      if (isa_name(isa) == want) return table_of(isa);
    }
  }
  return table_of(supported_isas().back());
}

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Sse2:
      return "sse2";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

std::vector<Isa> supported_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Sse2, Isa::Avx2}) {
    if (table_of(isa) != nullptr && cpu_has(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  const KernelTable* t = table_of(isa);
  if (t == nullptr || !cpu_has(isa)) {
    throw Error("instruction set " + std::string(isa_name(isa)) + " is not available");
  }
  return *t;
}

const KernelTable& kernels() { return *active().load(std::memory_order_acquire); }

void set_active_isa(Isa isa) { active().store(&kernels_for(isa), std::memory_order_release); }

}  // namespace mvmodal::simd
