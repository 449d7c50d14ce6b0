#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvmodal/decide.hpp"
#include "mvmodal/formula.hpp"

namespace mvmodal {

/// A* : every A <| B becomes A* <|p B* over the reserved atom.
Formula star_mvs5(const Formula& f, const std::string& reserved = "p@");
/// A** = (1)dia p -> A*.
Formula star_star_mvs5(const Formula& f, Resolution r, const std::string& reserved = "p@");
/// Every A <| B becomes dia A -> dia B.
Formula star_mvkd45(const Formula& f);

struct FaithfulnessOptions {
  std::vector<std::string> atoms{"q"};
  Resolution n{3};
  /// Exhaustive mode: every QFL2 formula with at most this many nodes.
  int max_size = 7;
  /// Sample mode: number of random formulas and their maximum depth.
  int samples = 0;
  int sample_depth = 3;
  std::uint64_t seed = 1;
  std::string reserved = "p@";
  DecideOptions decide;
};

struct FaithfulnessDisagreement {
  Formula formula;
  bool qfl2 = false;
  bool mvs5 = false;
  bool mvkd45 = false;
  /// Set when the pairwise model check failed rather than the status check.
  bool pairwise = false;
  std::optional<Countermodel> witness;
};

struct FaithfulnessReport {
  /// Formulas covered (with multiplicity in exhaustive mode).
  std::uint64_t formulas = 0;
  /// Semantically distinct formulas actually evaluated.
  std::uint64_t classes = 0;
  std::uint64_t tautologies = 0;
  std::vector<std::uint64_t> formulas_by_size;
  std::vector<FaithfulnessDisagreement> disagreements;
};

/// Exhaustive check over all QFL2 formulas of size <= max_size: leaves are
/// the atoms, top and bot; operators are !, the coefficients, ->, /\, \/, &,
/// |+|, <-> and <|. Formulas are grouped by their value tables over every
/// canonical model of the three semantics, so each class is decided once.
/// Also checks that A and A* agree on every p-extended possibilistic model.
FaithfulnessReport faithfulness_exhaustive(const FaithfulnessOptions& opts);

/// Random sample of opts.samples QFL2 formulas, each decided independently.
FaithfulnessReport faithfulness_sample(const FaithfulnessOptions& opts);

}  // namespace mvmodal
