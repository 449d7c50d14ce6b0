#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvmodal/values.hpp"

namespace mvmodal {

struct World {
  std::string id;
  /// One value per model atom, in the model's atom order.
  std::vector<TruthValue> val;

  friend bool operator==(const World&, const World&) = default;
};

/// Finite model with universal accessibility.
struct Mvs5Model {
  Resolution n;
  std::vector<std::string> atoms;
  std::vector<World> worlds;

  std::optional<std::size_t> atom_index(std::string_view atom) const;
  /// Throws ModelError for an unknown id.
  std::size_t world_index(std::string_view id) const;

  friend bool operator==(const Mvs5Model&, const Mvs5Model&) = default;
};

/// Mvs5Model plus a normalized possibility distribution over the worlds.
struct PossibilisticModel : Mvs5Model {
  /// One value per world.
  std::vector<TruthValue> pi;
  /// Name of the atom that carries pi in the p-extension.
  std::string reserved = "p@";

  friend bool operator==(const PossibilisticModel&, const PossibilisticModel&) = default;
};

/// Every violated invariant, empty when the model is well formed.
std::vector<std::string> validate(const Mvs5Model& m);
std::vector<std::string> validate(const PossibilisticModel& m);

/// Throws ModelError listing the violations, if any.
void require_valid(const Mvs5Model& m);
void require_valid(const PossibilisticModel& m);

/// MVS5 model over atoms + {reserved} whose reserved atom is valued by pi.
Mvs5Model p_extension(const PossibilisticModel& m, const std::string& reserved);
Mvs5Model p_extension(const PossibilisticModel& m);

/// Inverse of p_extension. The reserved atom must reach 1 somewhere.
PossibilisticModel p_restriction(const Mvs5Model& m, const std::string& reserved);

/// Merges worlds with equal valuations, keeping the lexicographically
/// smallest id and, for possibilistic models, the largest pi. Worlds are
/// ordered by their first occurrence.
Mvs5Model canonicalize(const Mvs5Model& m);
PossibilisticModel canonicalize(const PossibilisticModel& m);

}  // namespace mvmodal
