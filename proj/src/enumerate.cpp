#include "mvmodal/enumerate.hpp"

#include <limits>

#include "mvmodal/formula.hpp"

namespace mvmodal {
namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSat / b) return kSat;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

std::uint64_t sat_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, b);
  return r;
}

std::uint64_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    std::uint64_t num = n - k + i;
    if (r > kSat / num) return kSat;
    r = r * num / i;
  }
  return r;
}

}  // namespace

WorldTypes::WorldTypes(std::vector<std::string> atoms, Resolution r, std::size_t max_types)
    : atoms_(normalize_atoms(std::move(atoms))), r_(r) {
  std::uint64_t c = sat_pow(static_cast<std::uint64_t>(r.n()), atoms_.size());
  if (c > max_types) {
    throw CapExceeded(std::to_string(r.n()) + "^" + std::to_string(atoms_.size()) +
                      " world types exceed the cap of " + std::to_string(max_types));
  }
  count_ = static_cast<std::size_t>(c);
  digits_.resize(atoms_.size() * count_);
  for (std::size_t t = 0; t < count_; ++t) {
    std::size_t rest = t;
    for (std::size_t a = atoms_.size(); a-- > 0;) {
      digits_[a * count_ + t] = static_cast<std::uint8_t>(rest % static_cast<std::size_t>(r.n()));
      rest /= static_cast<std::size_t>(r.n());
    }
  }
}

std::vector<TruthValue> WorldTypes::valuation(std::size_t t) const {
  std::vector<TruthValue> v;
  for (std::size_t a = 0; a < atoms_.size(); ++a) v.emplace_back(r_, digit(t, a));
  return v;
}

std::uint64_t canonical_count(ModelClass cls, std::size_t types, Resolution r, int max_support) {
  std::size_t top = max_support < 0 ? types : std::min(types, static_cast<std::size_t>(max_support));
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= top; ++s) {
    std::uint64_t m = binom(types, s);
    if (cls == ModelClass::Possibilistic) {
      std::uint64_t all = sat_pow(static_cast<std::uint64_t>(r.n()), s);
      std::uint64_t none = sat_pow(static_cast<std::uint64_t>(r.n() - 1), s);
      m = sat_mul(m, all == kSat ? kSat : all - none);
    }
    total = sat_add(total, m);
  }
  return total;
}

CanonicalEnumerator::CanonicalEnumerator(ModelClass cls, std::vector<std::string> atoms, Resolution r,
                                         EnumLimits limits, int max_support)
    : cls_(cls), types_(std::move(atoms), r, limits.max_world_types) {
  int t = static_cast<int>(types_.count());
  max_support_ = (max_support < 0 || max_support > t) ? t : max_support;
  total_ = canonical_count(cls_, types_.count(), r, max_support_);
  if (total_ > limits.max_models) {
    throw CapExceeded(std::to_string(total_) + " canonical models exceed the cap of " +
                      std::to_string(limits.max_models));
  }
  if (max_support_ < 1) {
    done_ = true;
  } else {
    start_size(1);
  }
}

void CanonicalEnumerator::start_size(int s) {
  size_ = s;
  combo_.resize(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) combo_[static_cast<std::size_t>(i)] = i;
  pi_.assign(static_cast<std::size_t>(s), 0);
  pi_.back() = types_.resolution().denominator();
}

bool CanonicalEnumerator::advance_combo() {
  int t = static_cast<int>(types_.count());
  int s = size_;
  int i = s - 1;
  while (i >= 0 && combo_[static_cast<std::size_t>(i)] == t - s + i) --i;
  if (i < 0) return false;
  ++combo_[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < s; ++j) combo_[static_cast<std::size_t>(j)] = combo_[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

bool CanonicalEnumerator::advance_pi() {
  int d = types_.resolution().denominator();
  while (true) {
    std::size_t i = pi_.size();
    while (i > 0) {
      --i;
      if (++pi_[i] <= d) break;
      pi_[i] = 0;
      if (i == 0) return false;
    }
    for (int v : pi_) {
      if (v == d) return true;
    }
  }
}

bool CanonicalEnumerator::next(ModelBatch& out, std::size_t max_lanes) {
  if (done_ || max_lanes == 0) return false;
  const bool poss = cls_ == ModelClass::Possibilistic;
  const std::size_t rows = static_cast<std::size_t>(size_);
  std::vector<std::uint16_t> types;
  std::vector<std::uint8_t> pis;
  out.rows = size_;
  out.first_index = produced_;
  std::size_t lanes = 0;
  while (lanes < max_lanes) {
    for (int c : combo_) types.push_back(static_cast<std::uint16_t>(c));
    if (poss) {
      for (int p : pi_) pis.push_back(static_cast<std::uint8_t>(p));
    }
    ++lanes;
    ++produced_;
    if (poss && advance_pi()) continue;
    if (poss) {
      pi_.assign(rows, 0);
      pi_.back() = types_.resolution().denominator();
    }
    if (advance_combo()) continue;
    if (size_ + 1 > max_support_) {
      done_ = true;
    } else {
      start_size(size_ + 1);
    }
    break;
  }
  out.lanes = lanes;
  out.type.resize(rows * lanes);
  out.pi.resize(poss ? rows * lanes : 0);
  for (std::size_t m = 0; m < lanes; ++m) {
    for (std::size_t r = 0; r < rows; ++r) {
      out.type[r * lanes + m] = types[m * rows + r];
      if (poss) out.pi[r * lanes + m] = pis[m * rows + r];
    }
  }
  return true;
}

Mvs5Model CanonicalEnumerator::mvs5_model(const ModelBatch& b, std::size_t lane) const {
  Mvs5Model m;
  m.n = types_.resolution();
  m.atoms = types_.atoms();
  for (int r = 0; r < b.rows; ++r) {
    std::size_t t = b.type[static_cast<std::size_t>(r) * b.lanes + lane];
    m.worlds.push_back(World{"w" + std::to_string(r), types_.valuation(t)});
  }
  return m;
}

PossibilisticModel CanonicalEnumerator::possibilistic_model(const ModelBatch& b, std::size_t lane,
                                                            const std::string& reserved) const {
  if (b.pi.empty()) throw Error("batch carries no possibility distribution");
  PossibilisticModel m;
  static_cast<Mvs5Model&>(m) = mvs5_model(b, lane);
  m.reserved = reserved;
  for (int r = 0; r < b.rows; ++r) {
    m.pi.emplace_back(types_.resolution(), b.pi[static_cast<std::size_t>(r) * b.lanes + lane]);
  }
  return m;
}

std::vector<Mvs5Model> enum_mvs5_canonical(const std::vector<std::string>& atoms, Resolution r,
                                           EnumLimits limits) {
  CanonicalEnumerator e(ModelClass::Mvs5, atoms, r, limits);
  std::vector<Mvs5Model> out;
  ModelBatch b;
  while (e.next(b, 1024)) {
    for (std::size_t m = 0; m < b.lanes; ++m) out.push_back(e.mvs5_model(b, m));
  }
  return out;
}

std::vector<PossibilisticModel> enum_possibilistic_canonical(const std::vector<std::string>& atoms,
                                                             Resolution r, EnumLimits limits) {
  CanonicalEnumerator e(ModelClass::Possibilistic, atoms, r, limits);
  std::vector<PossibilisticModel> out;
  ModelBatch b;
  while (e.next(b, 1024)) {
    for (std::size_t m = 0; m < b.lanes; ++m) out.push_back(e.possibilistic_model(b, m));
  }
  return out;
}

}  // namespace mvmodal
