#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mvmodal/enumerate.hpp"
#include "mvmodal/kernels.hpp"
#include "mvmodal/semantics.hpp"

namespace mvmodal {

/// Evaluates core formulas on every model of a ModelBatch at once, one table
/// of rows * lanes numerators per subformula. Tables are cached per node
/// until the next load() or trim().
class BatchEvaluator {
 public:
  /// pi_atom names an atom that reads the batch's pi rows (used for the
  /// Mvs5 variant on p-extended possibilistic batches).
  BatchEvaluator(const WorldTypes& types, Variant v, std::string pi_atom = {},
                 const simd::KernelTable* kernels = nullptr);

  void load(const ModelBatch& batch);
  /// f must be desugared and fit the variant.
  const std::uint8_t* table(const Formula& f);
  /// Drops cached tables once they occupy more than budget bytes.
  void trim(std::size_t budget_bytes);

  /// First lane with a value below 1 somewhere, and the first such row.
  std::optional<std::pair<std::size_t, int>> first_failure(const std::uint8_t* t);

  std::size_t cells() const { return cells_; }

 private:
  std::vector<std::uint8_t> acquire();
  const std::uint8_t* store(const Formula& f, std::vector<std::uint8_t> buf);
  /// Reduces each lane over rows with max (or min) and writes the result to every row.
  void reduce_broadcast(const std::uint8_t* in, std::uint8_t* out, bool use_max);

  const WorldTypes& types_;
  Variant v_;
  std::string pi_atom_;
  const simd::KernelTable& k_;
  const ModelBatch* batch_ = nullptr;
  std::size_t cells_ = 0;
  std::uint8_t d_;
  std::vector<std::uint8_t> npi_;
  std::vector<std::uint8_t> lane_acc_;

  struct Entry {
    Formula keep;
    std::vector<std::uint8_t> buf;
  };
  std::unordered_map<const void*, Entry> cache_;
  std::size_t cached_bytes_ = 0;
  std::vector<std::vector<std::uint8_t>> pool_;
};

}  // namespace mvmodal
