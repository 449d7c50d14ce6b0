#pragma once

// Elementwise Lukasiewicz arithmetic over arrays of truth-value numerators.
//
// Every array holds numerators k of values k/d, d = n-1 <= 127. The scalar
// table is the reference; the vector tables must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace mvmodal::simd {

enum class Isa { Scalar, Sse2, Avx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  void (*neg)(std::uint8_t d, const std::uint8_t* a, std::uint8_t* out, std::size_t len);
  void (*imp)(std::uint8_t d, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
              std::size_t len);
  void (*tmin)(std::uint8_t d, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
               std::size_t len);
  void (*tmax)(std::uint8_t d, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
               std::size_t len);
  void (*sconj)(std::uint8_t d, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                std::size_t len);
  void (*sdisj)(std::uint8_t d, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                std::size_t len);
  void (*iff)(std::uint8_t d, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
              std::size_t len);
  /// out = (a == value) ? d : 0
  void (*coef)(std::uint8_t d, std::uint8_t value, const std::uint8_t* a, std::uint8_t* out,
               std::size_t len);
  /// acc = max(acc, a)
  void (*max_into)(const std::uint8_t* a, std::uint8_t* acc, std::size_t len);
  /// acc = min(acc, a)
  void (*min_into)(const std::uint8_t* a, std::uint8_t* acc, std::size_t len);
  /// Index of the first element different from value, or len.
  std::size_t (*find_ne)(std::uint8_t value, const std::uint8_t* a, std::size_t len);
};

const KernelTable& scalar_kernels();

/// Instruction sets compiled in and supported by the running CPU, Scalar first.
std::vector<Isa> supported_isas();

/// Throws mvmodal::Error if the instruction set is unavailable.
const KernelTable& kernels_for(Isa isa);

/// The active table: the widest supported ISA unless overridden with
/// set_active_isa() or the MVMODAL_ISA environment variable (scalar|sse2|avx2).
const KernelTable& kernels();

void set_active_isa(Isa isa);

}  // namespace mvmodal::simd
