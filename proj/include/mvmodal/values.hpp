#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mvmodal/error.hpp"

namespace mvmodal {

/// Number of truth values n; the value set is {0, 1/(n-1), ..., 1}.
///
/// n is limited to 128 so that a sum of two numerators always fits in a byte,
/// which the batch kernels rely on.
class Resolution {
 public:
  static constexpr int kMax = 128;

  constexpr Resolution() = default;
  explicit Resolution(int n);

  constexpr int n() const { return n_; }
  constexpr int denominator() const { return n_ - 1; }

  friend constexpr bool operator==(Resolution, Resolution) = default;

 private:
  int n_ = 2;
};

/// Exact truth value num/(n-1).
class TruthValue {
 public:
  constexpr TruthValue() = default;
  TruthValue(Resolution r, int num);

  static TruthValue zero(Resolution r) { return TruthValue(r, 0); }
  static TruthValue one(Resolution r) { return TruthValue(r, r.denominator()); }

  constexpr int num() const { return num_; }
  constexpr int den() const { return n_ - 1; }
  Resolution resolution() const { return Resolution(n_); }

  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_one() const { return num_ == n_ - 1; }

  /// "0", "1" or "k/d" with d = n-1.
  std::string str() const;
  /// "k/d" even at the endpoints.
  std::string fraction() const;

  /// Accepts "0", "1" and "k/d" where d must equal n-1.
  static TruthValue parse(std::string_view text, Resolution r);

  friend bool operator==(TruthValue a, TruthValue b) { return a.n_ == b.n_ && a.num_ == b.num_; }
  /// Ordering across resolutions throws ResolutionMismatch.
  friend std::strong_ordering operator<=>(TruthValue a, TruthValue b);

 private:
  std::uint8_t num_ = 0;
  std::uint8_t n_ = 2;
};

/// All values of a resolution in increasing order.
std::vector<TruthValue> all_values(Resolution r);

void require_same(TruthValue a, TruthValue b);

TruthValue neg(TruthValue x);
TruthValue imp(TruthValue x, TruthValue y);
TruthValue tmin(TruthValue x, TruthValue y);
TruthValue tmax(TruthValue x, TruthValue y);
TruthValue sconj(TruthValue x, TruthValue y);
TruthValue sdisj(TruthValue x, TruthValue y);
/// 1 - |x - y|, equal to min(imp(x, y), imp(y, x)).
TruthValue equivalence(TruthValue x, TruthValue y);

}  // namespace mvmodal
