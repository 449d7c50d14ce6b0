#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mvmodal/values.hpp"

namespace mvmodal {

/// Node kinds. Everything after Comp is sugar and disappears under desugar().
enum class Op : std::uint8_t {
  Atom,
  Neg,
  Imp,
  Min,    // weak conjunction /\, min(x, y)
  Max,    // weak disjunction \/, max(x, y)
  SConj,  // strong conjunction &, max(0, x + y - 1)
  SDisj,  // strong disjunction |+|, min(1, x + y)
  Iff,
  Coef,   // (i)A: 1 iff A has value i
  Box,
  Dia,
  Comp,   // A <| B, comparison of possibilities
  // sugar
  Top,
  Bot,
  CoefGe,
  CoefLe,
  CoefGt,
  CoefLt,
  DiaP,
  BoxP,
  CompP,
  NComp,
  Dienes,
  Goedel,
  Sum,
  Prod,
};

bool is_sugar(Op op);
std::size_t arity(Op op);

/// Atom used by desugar(True) = t@ -> t@. Evaluators read it as 0 when it is
/// not declared; its value never matters.
inline constexpr std::string_view kTruePlaceholder = "t@";
inline constexpr std::string_view kDefaultReserved = "p@";

class Formula;

namespace detail {
struct Node;
}

/// Immutable, shared formula tree. Copies are cheap; equality is structural.
class Formula {
 public:
  Formula() = default;

  static Formula atom(std::string name);
  static Formula neg(Formula a);
  static Formula imp(Formula a, Formula b);
  static Formula min(Formula a, Formula b);
  static Formula max(Formula a, Formula b);
  static Formula sconj(Formula a, Formula b);
  static Formula sdisj(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula coef(TruthValue i, Formula a);
  static Formula box(Formula a);
  static Formula dia(Formula a);
  static Formula comp(Formula a, Formula b);

  static Formula top();
  static Formula bot();
  /// op is one of CoefGe, CoefLe, CoefGt, CoefLt.
  static Formula coef_rel(Op op, TruthValue i, Formula a);
  static Formula dia_p(Formula a, std::string reserved = std::string(kDefaultReserved));
  static Formula box_p(Formula a, std::string reserved = std::string(kDefaultReserved));
  static Formula comp_p(Formula a, Formula b, std::string reserved = std::string(kDefaultReserved));
  /// Necessity comparison, defined as !(!a <|p !b).
  static Formula ncomp(Formula a, Formula b, std::string reserved = std::string(kDefaultReserved));
  static Formula dienes(Formula a, Formula b);
  static Formula goedel(Formula a, Formula b, Resolution r);
  static Formula sum(int k, Formula a);
  static Formula prod(int k, Formula a);

  /// Generic constructor used by transformations; validates arity.
  static Formula make(Op op, std::vector<Formula> kids, std::string name = {},
                      std::optional<TruthValue> value = std::nullopt, int count = 0);

  bool empty() const { return node_ == nullptr; }
  Op op() const;
  /// Atom name, or the reserved atom of DiaP/BoxP/CompP/NComp.
  const std::string& name() const;
  /// Coefficient of Coef/CoefGe/... and the unit carried by Goedel.
  TruthValue value() const;
  /// Repetition count of Sum/Prod.
  int count() const;
  std::size_t arity() const;
  const Formula& child(std::size_t i) const;
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }

  std::size_t hash() const;
  /// Number of nodes.
  std::size_t size() const;
  std::size_t depth() const;

  /// Identity of the shared node; used as a cache key by evaluators.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const detail::Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

struct ParseOptions {
  std::string reserved = std::string(kDefaultReserved);
};

/// Parses the textual grammar (see README). Throws ParseError.
Formula parse(std::string_view text, Resolution r, const ParseOptions& opts = {});

/// Canonical text; parse(print(f)) == f.
std::string print(const Formula& f);

/// Expands all sugar. Shares unchanged subtrees; idempotent.
Formula desugar(const Formula& f);

/// Atoms occurring in f (after desugar), excluding the True placeholder.
std::set<std::string> atoms_of(const Formula& f);

bool contains_op(const Formula& f, Op op);
/// No Box/Dia/Comp (sugar included).
bool is_modal_free(const Formula& f);

/// Simultaneous replacement of atoms by formulas.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& subst);

// ---- classification -------------------------------------------------------

enum class FormulaClass { Form0, B0, BFormula, Mec, QFL2, Modal, Mixed };

std::string_view class_name(FormulaClass c);

/// Syntactic classes of f. The language tags Form0/QFL2/Modal/Mixed partition
/// formulas by which of {Box, Dia} and {Comp} occur; B0 and BFormula are the
/// coefficient-generated Boolean classes. Mec is reported only when `atoms` is
/// given and f is a maximal elementary conjunction over exactly those atoms.
std::set<FormulaClass> classify(const Formula& f, const std::vector<std::string>* atoms = nullptr);

bool is_b0(const Formula& f);
bool is_b_formula(const Formula& f);

// ---- maximal elementary conjunctions --------------------------------------

/// Assignment of one value to every declared atom; denotes /\ (j_k) p_k.
struct Mec {
  std::vector<std::string> atoms;
  std::vector<TruthValue> values;

  Formula formula() const;
  std::string str() const;
  friend bool operator==(const Mec&, const Mec&) = default;
};

/// Sorted, de-duplicated copy of an atom list.
std::vector<std::string> normalize_atoms(std::vector<std::string> atoms);

/// All n^|atoms| mecs over the sorted atom list, lexicographic with the first
/// atom most significant. Throws on an empty list.
std::vector<Mec> mec_enumerate(const std::vector<std::string>& atoms, Resolution r);

}  // namespace mvmodal

template <>
struct std::hash<mvmodal::Formula> {
  std::size_t operator()(const mvmodal::Formula& f) const { return f.hash(); }
};
