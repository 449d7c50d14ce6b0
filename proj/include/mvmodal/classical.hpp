#pragma once

#include <string>
#include <vector>

#include "mvmodal/decide.hpp"
#include "mvmodal/formula.hpp"

namespace mvmodal {

/// Two-valued modal logics used as an independent oracle at n = 2.
enum class ClassicalLogic { S5, KD45 };

/// Worlds with Boolean valuations; under KD45 every world sees exactly the
/// believed ones, under S5 every world sees every world.
struct ClassicalModel {
  std::vector<std::string> atoms;
  std::vector<std::vector<bool>> worlds;
  std::vector<bool> believed;
};

/// Truth of f at world w. f may use sugar; coefficients must be 0 or 1 of n = 2.
bool classical_value(const Formula& f, const ClassicalModel& m, std::size_t w, ClassicalLogic logic);

/// Brute force over every set of distinct valuations (and, for KD45, every
/// nonempty believed subset) and every world.
bool classical_tautology(const Formula& f, const std::vector<std::string>& atoms, ClassicalLogic logic);

struct DegenerateReport {
  std::uint64_t formulas = 0;
  std::uint64_t mvs5_mismatches = 0;
  std::uint64_t mvkd45_mismatches = 0;
  /// First few disagreements, as "variant: formula".
  std::vector<std::string> examples;

  bool ok() const { return mvs5_mismatches == 0 && mvkd45_mismatches == 0; }
};

/// Compares MVS5 and MVKD45 verdicts at n = 2 with the classical S5 and KD45
/// oracles on every modal formula of depth at most `depth` over the atoms.
DegenerateReport degenerate_n2(const std::vector<std::string>& atoms, int depth, const DecideOptions& opts = {});

}  // namespace mvmodal
