#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvmodal/decide.hpp"
#include "mvmodal/formula.hpp"

namespace mvmodal {

/// Bad schema instantiation or malformed proof data.
class ProofError : public Error {
 public:
  using Error::Error;
};

enum class System { Ln, Mvs5, Mvkd45, Qfl2 };

std::string_view system_name(System s);
/// "ln", "mvs5", "mvkd45" or "qfl2"; throws Error otherwise.
System parse_system(std::string_view text);
/// Semantics whose 1-tautologies the system's theorems should be.
Variant system_variant(System s);

/// Restriction on what a metavariable may be replaced by.
enum class SideCondition { Any, B0, BFormula, Mec };

std::string_view side_condition_name(SideCondition c);

enum class ParamKind {
  /// A truth value, stored as its numerator.
  Value,
  /// A positive integer such as the m of the divisibility axioms.
  Count,
  /// Index into connectives().
  Connective,
};

struct ParamSpec {
  std::string name;
  ParamKind kind;
};

using Params = std::map<std::string, int>;
using Subst = std::map<std::string, Formula>;

/// The binary connectives a coefficient axiom may range over, in index order:
/// /\, \/, &, |+|, ->, <->.
const std::vector<Op>& connectives();
std::string_view connective_symbol(Op op);
/// Truth function of a binary core connective.
TruthValue apply_connective(Op op, TruthValue x, TruthValue y);

/// What an instantiation needs besides the substitution: the resolution and
/// the atom list that m.e.c. parameters and disjunctions over E range over.
struct SchemaContext {
  Resolution n;
  std::vector<std::string> atoms;
};

struct Schema {
  std::string id;
  /// Human-readable form.
  std::string text;
  /// Lemma families are only instantiated by the axiom suite, never cited in proofs.
  bool axiom = true;
  std::vector<std::string> metavars;
  std::map<std::string, SideCondition> side;
  std::vector<ParamSpec> params;
  /// Builds the instance, or returns nothing when the parameters violate the
  /// schema's constraint. Metavariables must already be bound.
  std::function<std::optional<Formula>(const Subst&, const Params&, const SchemaContext&)> build;

  SideCondition condition(const std::string& metavar) const;
};

/// The schemas of a system: the propositional ones, then modal axioms, then
/// lemma families. Qfl2 holds the comparative formulas of the QPL family.
const std::vector<Schema>& catalog(System s);
/// Throws ProofError for unknown ids.
const Schema& find_schema(System s, std::string_view id);

/// Inclusive range of a parameter at resolution n.
std::pair<int, int> param_range(const ParamSpec& p, Resolution n);

/// Ground instance. Throws ProofError naming the violated side condition,
/// missing or extra bindings, out-of-range or inadmissible parameters.
Formula instantiate(const Schema& s, const Subst& subst, const Params& params, const SchemaContext& ctx);

/// Checks one binding against a side condition; returns the reason it fails.
std::optional<std::string> side_condition_violation(SideCondition c, const Formula& f, const SchemaContext& ctx);

struct SchemaMatch {
  Subst subst;
  Params params;
};

/// First-order match of f against the schema. Parameters not fixed by
/// `fixed` are tried in increasing order; the first admissible match wins.
std::optional<SchemaMatch> match_schema(const Schema& s, const Formula& f, const SchemaContext& ctx,
                                        const Params& fixed = {});

// ---- proofs ---------------------------------------------------------------

struct Justification {
  enum class Kind { Premise, Axiom, MP, Nec, CoefOne };
  Kind kind = Kind::Axiom;
  /// Premise: 1-based index into Proof::premises.
  std::size_t premise = 0;
  std::string schema;
  std::optional<Subst> subst;
  Params params;
  /// 1-based earlier lines: MP takes (minor, major) in either order.
  std::vector<std::size_t> refs;
};

struct ProofLine {
  Formula formula;
  Justification just;
};

struct Proof {
  System system = System::Mvs5;
  Resolution n{3};
  /// Atoms that m.e.c. parameters range over; empty means every atom of the proof.
  std::vector<std::string> atoms;
  std::vector<Formula> premises;
  std::vector<ProofLine> lines;
};

struct ProofCheck {
  bool ok = true;
  /// 1-based offending line; 0 for proof-level problems.
  std::size_t line = 0;
  std::string reason;
};

/// Every line must be a premise, an axiom instance of the system, or follow
/// by MP, Nec or "from A infer (1)A" from earlier lines. L_n has only MP;
/// Nec is disabled whenever there are premises, which must be B-formulas in
/// the modal systems.
ProofCheck check_proof(const Proof& p);

/// The context check_proof uses for m.e.c. schemas.
SchemaContext proof_context(const Proof& p);

struct SpotcheckLine {
  std::size_t line = 0;
  bool tautology = false;
  /// Enumeration cap reached; the line is unverified.
  bool skipped = false;
  std::optional<Countermodel> countermodel;
};

struct SpotcheckReport {
  bool ok = true;
  bool partial = false;
  std::vector<SpotcheckLine> lines;
};

/// Decides every line of a premise-free proof under the system's semantics.
SpotcheckReport soundness_spotcheck(const Proof& p, const DecideOptions& opts = {});

}  // namespace mvmodal
