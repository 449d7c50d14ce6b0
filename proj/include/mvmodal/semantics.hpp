#pragma once

#include <string_view>
#include <unordered_map>
#include <vector>

#include "mvmodal/formula.hpp"
#include "mvmodal/kripke.hpp"

namespace mvmodal {

/// Mvs5: box/dia are min/max over all worlds.
/// Mvkd45: dia A = max(pi /\ A), box A = !dia !A.
/// AltBox: box A = min(pi -> A), dia A = max(pi & A).
/// Qfl2: A <| B = max(pi /\ A) -> max(pi /\ B).
enum class Variant { Mvs5, Mvkd45, AltBox, Qfl2 };

std::string_view variant_name(Variant v);
/// Accepts mvs5, mvkd45, altbox, qfl2. Throws Error otherwise.
Variant parse_variant(std::string_view name);

/// Throws EvalError if f uses an operator the variant does not interpret, or
/// a coefficient of another resolution.
void check_formula(const Formula& f, Variant v, Resolution r);

/// Reference evaluator over one model. Values of box, dia and <| nodes do not
/// depend on the world and are memoized per node.
class Evaluator {
 public:
  /// Only the Mvs5 variant applies to a model without pi.
  Evaluator(const Mvs5Model& m, Variant v = Variant::Mvs5);
  /// The Mvs5 variant evaluates on the p-extension.
  Evaluator(const PossibilisticModel& m, Variant v);

  TruthValue at(const Formula& f, std::size_t world);
  TruthValue at(const Formula& f, std::string_view world_id);
  /// Values at every world, in model order.
  std::vector<TruthValue> all(const Formula& f);

  std::size_t world_count() const { return ids_.size(); }

 private:
  Formula prepare(const Formula& f);
  std::uint8_t node(const Formula& f, std::size_t w);
  std::uint8_t global(const Formula& f);

  Resolution r_;
  Variant v_;
  std::vector<std::string> atoms_;
  std::vector<std::string> ids_;
  /// vals_[w * atoms + a]
  std::vector<std::uint8_t> vals_;
  std::vector<std::uint8_t> pi_;
  std::unordered_map<const void*, std::uint8_t> memo_;
  std::vector<Formula> keep_;
  std::unordered_map<const void*, Formula> prepared_;
};

TruthValue eval(const Formula& f, const Mvs5Model& m, std::string_view world, Variant v = Variant::Mvs5);
TruthValue eval(const Formula& f, const PossibilisticModel& m, std::string_view world, Variant v);

/// max over worlds of pi(w) /\ ||f||_w. Modal subformulas use Mvkd45, <| uses Qfl2.
TruthValue possibility(const Formula& f, const PossibilisticModel& m);
/// 1 - possibility(!f).
TruthValue necessity(const Formula& f, const PossibilisticModel& m);

/// Value of a formula whose atoms all occur beneath box, dia or <|; asserts
/// that it is the same at every world.
TruthValue global_value(const Formula& f, const Mvs5Model& m, Variant v = Variant::Mvs5);
TruthValue global_value(const Formula& f, const PossibilisticModel& m, Variant v);

/// Modal-free formula under a valuation of the listed atoms.
TruthValue eval_prop(const Formula& f, const std::vector<std::string>& atoms,
                     const std::vector<TruthValue>& val, Resolution r);

}  // namespace mvmodal
