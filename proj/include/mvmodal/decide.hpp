#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mvmodal/enumerate.hpp"
#include "mvmodal/semantics.hpp"

namespace mvmodal {

struct DecideOptions {
  EnumLimits limits;
  /// Worker threads; results do not depend on it.
  unsigned jobs = 1;
  std::size_t batch_lanes = 2048;
  /// Restrict the search to the witness bound (exact, see witness_bound).
  bool use_bound = true;
  /// Reserved atom name stamped on possibilistic countermodels.
  std::string reserved = "p@";
};

struct Countermodel {
  std::variant<Mvs5Model, PossibilisticModel> model;
  std::string world;
  TruthValue value;
};

struct Verdict {
  bool is_tautology = true;
  std::optional<Countermodel> countermodel;
  /// Canonical models examined: the index of the countermodel plus one, or
  /// every model within the bound.
  std::uint64_t models_checked = 0;
};

ModelClass model_class(Variant v);

/// Largest support size a first countermodel needs: one world to evaluate at,
/// one witness per distinct modal subformula (two per <|), and a pi = 1 world
/// where pi matters. Formulas without modalities need a single world.
int witness_bound(const Formula& f, Variant v);

/// Decides every formula over one shared enumeration of canonical models.
/// Each result is the first countermodel in enumeration order (smallest
/// support first), independent of opts.jobs.
std::vector<Verdict> run_checks(const std::vector<Formula>& fs, Variant v,
                                const std::vector<std::string>& atoms, Resolution r,
                                const DecideOptions& opts = {});

Verdict is_one_tautology(const Formula& f, Variant v, const std::vector<std::string>& atoms, Resolution r,
                         const DecideOptions& opts = {});

/// Every world giving all premises value 1 gives f value 1.
Verdict entails(const std::vector<Formula>& premises, const Formula& f, Variant v,
                const std::vector<std::string>& atoms, Resolution r, const DecideOptions& opts = {});

/// f and g take equal values at every world of every model.
Verdict equiv_check(const Formula& f, const Formula& g, Variant v, const std::vector<std::string>& atoms,
                    Resolution r, const DecideOptions& opts = {});

}  // namespace mvmodal
