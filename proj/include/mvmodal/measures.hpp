#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvmodal/formula.hpp"
#include "mvmodal/kripke.hpp"

namespace mvmodal {

/// A possibility measure given by its values on the maximal elementary
/// conjunctions. table[k] belongs to mec_enumerate(atoms, n)[k].
struct PossibilityAssignment {
  Resolution n;
  std::vector<std::string> atoms;
  std::vector<TruthValue> table;

  std::vector<Mec> mecs() const { return mec_enumerate(atoms, n); }
  friend bool operator==(const PossibilityAssignment&, const PossibilityAssignment&) = default;
};

/// Violated invariants (sorted atoms, total table, a value 1), empty when valid.
std::vector<std::string> validate(const PossibilityAssignment& a);

/// Pi(f) as the join over i of i /\ Pi((i)f), where Pi of the Boolean formula
/// (i)f is the largest table value among the mecs making it true.
TruthValue measure_of(const PossibilityAssignment& a, const Formula& f);

struct MeasureReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::size_t checks = 0;
};

/// Checks Pi(True) = 1, Pi(False) = 0, Pi(A \/ B) = max(Pi(A), Pi(B)) over
/// pairs of the family, Pi(A) = Pi(B) for the supplied equivalent pairs, and
/// Pi(A) = join_i(i /\ Pi((i)A)) for each member.
MeasureReport check_measure(const PossibilityAssignment& a, const std::vector<Formula>& family,
                            const std::vector<std::pair<Formula, Formula>>& equivalent = {});

/// One world per mec, valued by the mec, with pi equal to its table entry.
PossibilisticModel reconstruct_model(const PossibilityAssignment& a);

/// table(E) = possibility(E, m) over the model's (sorted) atoms.
PossibilityAssignment measure_from_model(const PossibilisticModel& m);

}  // namespace mvmodal
