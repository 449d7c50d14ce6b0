#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvmodal/proofs.hpp"

namespace mvmodal {

struct SuiteOptions {
  System system = System::Mvs5;
  Resolution n{3};
  std::vector<std::string> atoms{"q"};
  /// Bound on the sum of the substituted formulas' depths. Metavariables
  /// restricted to (B0 or B-) Boolean formulas get their coefficient for free.
  int depth = 2;
  /// Include the lemma families along with the axioms.
  bool lemmas = true;
  /// Restrict to these schema ids when nonempty.
  std::vector<std::string> only;
  /// Merge pool formulas with identical value tables before instantiating.
  bool dedup = true;
  DecideOptions decide;
};

struct SchemaResult {
  std::string id;
  std::string text;
  bool axiom = true;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::optional<Formula> first_failure;
  std::optional<Countermodel> witness;
};

struct SuiteReport {
  System system = System::Mvs5;
  Variant variant = Variant::Mvs5;
  Resolution n;
  std::vector<std::string> atoms;
  int depth = 0;
  /// Substitution candidates after merging equivalent formulas.
  std::uint64_t pool = 0;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::vector<SchemaResult> schemas;

  bool ok() const { return failures == 0; }
};

/// Instantiates the system's schemas over a pool of generated formulas and
/// decides every instance under the system's semantics.
SuiteReport axiom_suite(const SuiteOptions& opts);

}  // namespace mvmodal
