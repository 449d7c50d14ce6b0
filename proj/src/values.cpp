#include "mvmodal/values.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace mvmodal {

Resolution::Resolution(int n) : n_(n) {
  if (n < 2 || n > kMax) {
    throw Error("resolution must satisfy 2 <= n <= " + std::to_string(kMax) + ", got " +
                std::to_string(n));
  }
}

TruthValue::TruthValue(Resolution r, int num)
    : num_(static_cast<std::uint8_t>(num)), n_(static_cast<std::uint8_t>(r.n())) {
  if (num < 0 || num > r.denominator()) {
    throw Error("truth value numerator " + std::to_string(num) + " outside 0.." +
                std::to_string(r.denominator()));
  }
}

std::string TruthValue::str() const {
  if (num_ == 0) return "0";
  if (is_one()) return "1";
  return fraction();
}

std::string TruthValue::fraction() const { return std::to_string(num_) + "/" + std::to_string(den()); }

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error("malformed truth value '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

TruthValue TruthValue::parse(std::string_view text, Resolution r) {
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) {
    int v = parse_int(trimmed, text);
    if (v == 0) return zero(r);
    if (v == 1) return one(r);
    throw Error("truth value '" + std::string(text) + "' must be 0, 1 or k/" +
                std::to_string(r.denominator()));
  }
  int k = parse_int(trimmed.substr(0, slash), text);
  int d = parse_int(trimmed.substr(slash + 1), text);
  if (d != r.denominator()) {
    throw Error("truth value '" + std::string(text) + "' has denominator " + std::to_string(d) +
                ", expected " + std::to_string(r.denominator()));
  }
  return TruthValue(r, k);
}

std::strong_ordering operator<=>(TruthValue a, TruthValue b) {
  require_same(a, b);
  return a.num_ <=> b.num_;
}

std::vector<TruthValue> all_values(Resolution r) {
  std::vector<TruthValue> out;
  out.reserve(static_cast<std::size_t>(r.n()));
  for (int k = 0; k < r.n(); ++k) out.emplace_back(r, k);
  return out;
}

void require_same(TruthValue a, TruthValue b) {
  if (a.den() != b.den()) {
    throw ResolutionMismatch("truth values of resolutions n=" + std::to_string(a.den() + 1) +
                             " and n=" + std::to_string(b.den() + 1) + " combined");
  }
}

TruthValue neg(TruthValue x) { return TruthValue(x.resolution(), x.den() - x.num()); }

TruthValue imp(TruthValue x, TruthValue y) {
  require_same(x, y);
  return TruthValue(x.resolution(), std::min(x.den() - x.num() + y.num(), x.den()));
}

TruthValue tmin(TruthValue x, TruthValue y) {
  require_same(x, y);
  return x.num() <= y.num() ? x : y;
}

TruthValue tmax(TruthValue x, TruthValue y) {
  require_same(x, y);
  return x.num() >= y.num() ? x : y;
}

TruthValue sconj(TruthValue x, TruthValue y) {
  require_same(x, y);
  return TruthValue(x.resolution(), std::max(0, x.num() + y.num() - x.den()));
}

TruthValue sdisj(TruthValue x, TruthValue y) {
  require_same(x, y);
  return TruthValue(x.resolution(), std::min(x.den(), x.num() + y.num()));
}

TruthValue equivalence(TruthValue x, TruthValue y) {
  require_same(x, y);
  return TruthValue(x.resolution(), x.den() - std::abs(x.num() - y.num()));
}

}  // namespace mvmodal
