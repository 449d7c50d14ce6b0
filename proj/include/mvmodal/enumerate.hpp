#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvmodal/kripke.hpp"

namespace mvmodal {

enum class ModelClass { Mvs5, Possibilistic };

struct EnumLimits {
  /// Largest accepted n^|atoms|.
  std::size_t max_world_types = 16;
  /// Largest accepted number of enumerated models.
  std::uint64_t max_models = 10'000'000;
};

/// The n^|atoms| valuations over a sorted atom list, first atom most significant.
class WorldTypes {
 public:
  WorldTypes(std::vector<std::string> atoms, Resolution r, std::size_t max_types);

  const std::vector<std::string>& atoms() const { return atoms_; }
  Resolution resolution() const { return r_; }
  std::size_t count() const { return count_; }
  /// Numerator of atom a in valuation type t.
  std::uint8_t digit(std::size_t t, std::size_t a) const { return digits_[a * count_ + t]; }
  std::vector<TruthValue> valuation(std::size_t t) const;

 private:
  std::vector<std::string> atoms_;
  Resolution r_;
  std::size_t count_ = 1;
  std::vector<std::uint8_t> digits_;
};

/// A slab of canonical models sharing one support size. Lane m is one model;
/// row r is its r-th world. Arrays are row-major: x[r * lanes + m].
struct ModelBatch {
  int rows = 0;
  std::size_t lanes = 0;
  std::uint64_t first_index = 0;
  std::vector<std::uint16_t> type;
  /// Possibility numerators; empty for the Mvs5 class.
  std::vector<std::uint8_t> pi;
};

/// Number of canonical models with support size at most max_support
/// (all support sizes when max_support < 0). Saturates at UINT64_MAX.
std::uint64_t canonical_count(ModelClass cls, std::size_t types, Resolution r, int max_support = -1);

/// Canonical models ordered by support size, then by the lexicographic set of
/// world types, then (possibilistic class) by the pi vector in mixed radix.
/// Possibilistic models map every present type to a value with at least one 1;
/// a present type with pi 0 is still a world.
class CanonicalEnumerator {
 public:
  CanonicalEnumerator(ModelClass cls, std::vector<std::string> atoms, Resolution r,
                      EnumLimits limits = {}, int max_support = -1);

  ModelClass model_class() const { return cls_; }
  const WorldTypes& types() const { return types_; }
  int max_support() const { return max_support_; }
  std::uint64_t total() const { return total_; }

  /// Fills the next batch of at most max_lanes models; false when exhausted.
  bool next(ModelBatch& out, std::size_t max_lanes);

  Mvs5Model mvs5_model(const ModelBatch& b, std::size_t lane) const;
  PossibilisticModel possibilistic_model(const ModelBatch& b, std::size_t lane,
                                         const std::string& reserved = "p@") const;

 private:
  bool advance_combo();
  bool advance_pi();
  void start_size(int s);

  ModelClass cls_;
  WorldTypes types_;
  int max_support_;
  std::uint64_t total_ = 0;
  std::uint64_t produced_ = 0;
  int size_ = 0;
  std::vector<int> combo_;
  std::vector<int> pi_;
  bool done_ = false;
};

std::vector<Mvs5Model> enum_mvs5_canonical(const std::vector<std::string>& atoms, Resolution r,
                                           EnumLimits limits = {});
std::vector<PossibilisticModel> enum_possibilistic_canonical(const std::vector<std::string>& atoms,
                                                             Resolution r, EnumLimits limits = {});

}  // namespace mvmodal
