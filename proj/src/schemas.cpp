#include <algorithm>

#include "mvmodal/proofs.hpp"

namespace mvmodal {

std::string_view system_name(System s) {
  switch (s) {
    case System::Ln:
      return "ln";
    case System::Mvs5:
      return "mvs5";
    case System::Mvkd45:
      return "mvkd45";
    case System::Qfl2:
      return "qfl2";
  }
  return "?";
}

System parse_system(std::string_view text) {
  for (System s : {System::Ln, System::Mvs5, System::Mvkd45, System::Qfl2}) {
    if (text == system_name(s)) return s;
  }
  throw Error("unknown system '" + std::string(text) + "' (expected ln, mvs5, mvkd45 or qfl2)");
}

Variant system_variant(System s) {
  switch (s) {
    case System::Ln:
    case System::Mvs5:
      return Variant::Mvs5;
    case System::Mvkd45:
      return Variant::Mvkd45;
    case System::Qfl2:
      return Variant::Qfl2;
  }
  return Variant::Mvs5;
}

std::string_view side_condition_name(SideCondition c) {
  switch (c) {
    case SideCondition::Any:
      return "any formula";
    case SideCondition::B0:
      return "B0-formula";
    case SideCondition::BFormula:
      return "B-formula";
    case SideCondition::Mec:
      return "maximal elementary conjunction";
  }
  return "?";
}

const std::vector<Op>& connectives() {
  static const std::vector<Op> ops{Op::Min, Op::Max, Op::SConj, Op::SDisj, Op::Imp, Op::Iff};
  return ops;
}

std::string_view connective_symbol(Op op) {
  switch (op) {
    case Op::Min:
      return "/\\";
    case Op::Max:
      return "\\/";
    case Op::SConj:
      return "&";
    case Op::SDisj:
      return "|+|";
    case Op::Imp:
      return "->";
    case Op::Iff:
      return "<->";
    default:
      throw Error("not a binary connective");
  }
}

TruthValue apply_connective(Op op, TruthValue x, TruthValue y) {
  switch (op) {
    case Op::Min:
      return tmin(x, y);
    case Op::Max:
      return tmax(x, y);
    case Op::SConj:
      return sconj(x, y);
    case Op::SDisj:
      return sdisj(x, y);
    case Op::Imp:
      return imp(x, y);
    case Op::Iff:
      return equivalence(x, y);
    default:
      throw Error("not a binary connective");
  }
}

SideCondition Schema::condition(const std::string& metavar) const {
  auto it = side.find(metavar);
  return it == side.end() ? SideCondition::Any : it->second;
}

namespace {

using F = Formula;
using Build = std::function<std::optional<Formula>(const Subst&, const Params&, const SchemaContext&)>;

TruthValue val(const Params& p, const char* name, const SchemaContext& c) { return TruthValue(c.n, p.at(name)); }

F ge(TruthValue i, F a) { return F::coef_rel(Op::CoefGe, i, std::move(a)); }
F le(TruthValue i, F a) { return F::coef_rel(Op::CoefLe, i, std::move(a)); }
F gt(TruthValue i, F a) { return F::coef_rel(Op::CoefGt, i, std::move(a)); }

/// Left-associated disjunction of f(E) over every mec of the context atoms.
F over_mecs(const SchemaContext& c, const std::function<F(const F&)>& f) {
  std::optional<F> out;
  for (const auto& e : mec_enumerate(c.atoms, c.n)) {
    F term = f(e.formula());
    out = out ? F::max(*out, term) : term;
  }
  return *out;
}

Schema schema(std::string id, std::string text, std::vector<std::string> metavars, Build build,
              std::vector<ParamSpec> params = {}, std::map<std::string, SideCondition> side = {}) {
  Schema s;
  s.id = std::move(id);
  s.text = std::move(text);
  s.metavars = std::move(metavars);
  s.build = std::move(build);
  s.params = std::move(params);
  s.side = std::move(side);
  return s;
}

Schema lemma(Schema s) {
  s.axiom = false;
  return s;
}

std::vector<Schema> propositional(SideCondition boolean) {
  std::vector<Schema> out;
  out.push_back(schema("L1", "A -> (B -> A)", {"A", "B"}, [](const Subst& s, const Params&, const SchemaContext&) {
    return F::imp(s.at("A"), F::imp(s.at("B"), s.at("A")));
  }));
  out.push_back(schema("L2", "(A -> B) -> ((B -> C) -> (A -> C))", {"A", "B", "C"},
                       [](const Subst& s, const Params&, const SchemaContext&) {
                         const F &a = s.at("A"), &b = s.at("B"), &c = s.at("C");
                         return F::imp(F::imp(a, b), F::imp(F::imp(b, c), F::imp(a, c)));
                       }));
  out.push_back(schema("L3", "(!B -> !A) -> (A -> B)", {"A", "B"},
                       [](const Subst& s, const Params&, const SchemaContext&) {
                         const F &a = s.at("A"), &b = s.at("B");
                         return F::imp(F::imp(F::neg(b), F::neg(a)), F::imp(a, b));
                       }));
  out.push_back(schema("L4", "((A -> B) -> B) -> ((B -> A) -> A)", {"A", "B"},
                       [](const Subst& s, const Params&, const SchemaContext&) {
                         const F &a = s.at("A"), &b = s.at("B");
                         return F::imp(F::imp(F::imp(a, b), b), F::imp(F::imp(b, a), a));
                       }));
  out.push_back(schema("SIGMA", "sum(n, A) -> sum(n-1, A)", {"A"},
                       [](const Subst& s, const Params&, const SchemaContext& c) -> std::optional<F> {
                         int n = c.n.n();
                         return F::imp(F::sum(n, s.at("A")), F::sum(n - 1, s.at("A")));
                       }));
  out.push_back(schema(
      "DIV", "sum(n-1, prod(m, A) |+| (!A & sum(m-1, A))) for 1 < m < n-1, m-1 not dividing n-1", {"A"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        int n = c.n.n();
        int m = p.at("m");
        if (!(1 < m && m < n - 1) || (n - 1) % (m - 1) == 0) return std::nullopt;
        const F& a = s.at("A");
        return F::sum(n - 1, F::sdisj(F::prod(m, a), F::sconj(F::neg(a), F::sum(m - 1, a))));
      },
      {{"m", ParamKind::Count}}));
  out.push_back(schema("COEF_EXH", "\\/_i (i)A", {"A"}, [](const Subst& s, const Params&, const SchemaContext& c) {
    std::optional<F> out;
    for (TruthValue i : all_values(c.n)) {
      F t = F::coef(i, s.at("A"));
      out = out ? F::max(*out, t) : t;
    }
    return *out;
  }));
  out.push_back(schema("COEF_EXCL", "/\\_{i != j} !((i)A /\\ (j)A)", {"A"},
                       [](const Subst& s, const Params&, const SchemaContext& c) {
                         std::optional<F> out;
                         for (TruthValue i : all_values(c.n)) {
                           for (TruthValue j : all_values(c.n)) {
                             if (i == j) continue;
                             F t = F::neg(F::min(F::coef(i, s.at("A")), F::coef(j, s.at("A"))));
                             out = out ? F::min(*out, t) : t;
                           }
                         }
                         return *out;
                       }));
  out.push_back(schema(
      "COEF_NEG", "(i)A -> (1-i)!A", {"A"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        TruthValue i = val(p, "i", c);
        return F::imp(F::coef(i, s.at("A")), F::coef(neg(i), F::neg(s.at("A"))));
      },
      {{"i", ParamKind::Value}}));
  out.push_back(schema(
      "COEF_CONN", "((i)A /\\ (j)B) -> (t(i, j))(A * B)", {"A", "B"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        TruthValue i = val(p, "i", c);
        TruthValue j = val(p, "j", c);
        Op op = connectives().at(static_cast<std::size_t>(p.at("op")));
        const F &a = s.at("A"), &b = s.at("B");
        return F::imp(F::min(F::coef(i, a), F::coef(j, b)),
                      F::coef(apply_connective(op, i, j), F::make(op, {a, b})));
      },
      {{"i", ParamKind::Value}, {"j", ParamKind::Value}, {"op", ParamKind::Connective}}));
  out.push_back(schema("COEF_ONE", "(1)A -> A", {"A"}, [](const Subst& s, const Params&, const SchemaContext& c) {
    return F::imp(F::coef(TruthValue::one(c.n), s.at("A")), s.at("A"));
  }));
  out.push_back(schema(
      "B_ONE", "A <-> (1)A", {"A"},
      [](const Subst& s, const Params&, const SchemaContext& c) {
        return F::iff(s.at("A"), F::coef(TruthValue::one(c.n), s.at("A")));
      },
      {}, {{"A", boolean}}));
  out.push_back(schema(
      "B_S", "(A -> (B -> C)) -> ((A -> B) -> (A -> C))", {"A", "B", "C"},
      [](const Subst& s, const Params&, const SchemaContext&) {
        const F &a = s.at("A"), &b = s.at("B"), &c = s.at("C");
        return F::imp(F::imp(a, F::imp(b, c)), F::imp(F::imp(a, b), F::imp(a, c)));
      },
      {}, {{"A", boolean}, {"B", boolean}, {"C", boolean}}));
  return out;
}

Schema axiom_k() {
  return schema("K", "box(A -> B) -> (box A -> box B)", {"A", "B"},
                [](const Subst& s, const Params&, const SchemaContext&) {
                  const F &a = s.at("A"), &b = s.at("B");
                  return F::imp(F::box(F::imp(a, b)), F::imp(F::box(a), F::box(b)));
                });
}

std::vector<Schema> build_ln() { return propositional(SideCondition::B0); }

std::vector<Schema> build_mvs5() {
  auto out = propositional(SideCondition::BFormula);
  out.push_back(axiom_k());
  out.push_back(schema("T", "box A -> A", {"A"}, [](const Subst& s, const Params&, const SchemaContext&) {
    return F::imp(F::box(s.at("A")), s.at("A"));
  }));
  out.push_back(schema("4", "box A -> box box A", {"A"}, [](const Subst& s, const Params&, const SchemaContext&) {
    return F::imp(F::box(s.at("A")), F::box(F::box(s.at("A"))));
  }));
  out.push_back(schema("5", "dia A -> box dia A", {"A"}, [](const Subst& s, const Params&, const SchemaContext&) {
    return F::imp(F::dia(s.at("A")), F::box(F::dia(s.at("A"))));
  }));
  out.push_back(schema(
      "FIT", "(>=i)(box A) <-> box (>=i)A", {"A"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        TruthValue i = val(p, "i", c);
        return F::iff(ge(i, F::box(s.at("A"))), F::box(ge(i, s.at("A"))));
      },
      {{"i", ParamKind::Value}}));
  out.push_back(lemma(schema(
      "LEM4_9", "(i)dia C -> (box (<=i)C /\\ dia (i)C)", {"C"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        TruthValue i = val(p, "i", c);
        const F& x = s.at("C");
        return F::imp(F::coef(i, F::dia(x)), F::min(F::box(le(i, x)), F::dia(F::coef(i, x))));
      },
      {{"i", ParamKind::Value}})));
  return out;
}

std::vector<Schema> build_mvkd45() {
  auto out = propositional(SideCondition::BFormula);
  out.push_back(axiom_k());
  out.push_back(schema("4", "box A <-> box box A", {"A"}, [](const Subst& s, const Params&, const SchemaContext&) {
    return F::iff(F::box(s.at("A")), F::box(F::box(s.at("A"))));
  }));
  out.push_back(schema("5", "dia A <-> box dia A", {"A"}, [](const Subst& s, const Params&, const SchemaContext&) {
    return F::iff(F::dia(s.at("A")), F::box(F::dia(s.at("A"))));
  }));
  out.push_back(schema(
      "JBOX", "(j)box A <-> box (j)box A", {"A"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        F x = F::coef(val(p, "j", c), F::box(s.at("A")));
        return F::iff(x, F::box(x));
      },
      {{"j", ParamKind::Value}}));
  out.push_back(schema(
      "JDIA", "(j)dia A <-> box (j)dia A", {"A"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        F x = F::coef(val(p, "j", c), F::dia(s.at("A")));
        return F::iff(x, F::box(x));
      },
      {{"j", ParamKind::Value}}));
  out.push_back(schema("D", "(1)dia top", {}, [](const Subst&, const Params&, const SchemaContext& c) {
    return F::coef(TruthValue::one(c.n), F::dia(F::top()));
  }));
  auto mec1 = [](const char* id, const char* param) {
    return schema(
        id, std::string("((") + param + ")dia A /\\ E) -> (<=" + param + ")(A /\\ dia E)", {"A", "E"},
        [param](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
          TruthValue j = val(p, param, c);
          const F &a = s.at("A"), &e = s.at("E");
          return F::imp(F::min(F::coef(j, F::dia(a)), e), le(j, F::min(a, F::dia(e))));
        },
        {{param, ParamKind::Value}}, {{"E", SideCondition::Mec}});
  };
  out.push_back(mec1("MEC1", "j"));
  out.push_back(schema(
      "MEC2", "(j)dia A -> \\/_E (>0)dia(E /\\ (j)(A /\\ dia E)) for j > 0", {"A"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        TruthValue j = val(p, "j", c);
        if (j.is_zero()) return std::nullopt;
        const F& a = s.at("A");
        TruthValue zero = TruthValue::zero(c.n);
        return F::imp(F::coef(j, F::dia(a)), over_mecs(c, [&](const F& e) {
                        return gt(zero, F::dia(F::min(e, F::coef(j, F::min(a, F::dia(e))))));
                      }));
      },
      {{"j", ParamKind::Value}}));
  out.push_back(lemma(schema(
      "MEC2_GE", "(i)dia A -> \\/_E (>=i)dia(E /\\ (i)(A /\\ dia E))", {"A"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        TruthValue i = val(p, "i", c);
        const F& a = s.at("A");
        return F::imp(F::coef(i, F::dia(a)), over_mecs(c, [&](const F& e) {
                        return ge(i, F::dia(F::min(e, F::coef(i, F::min(a, F::dia(e))))));
                      }));
      },
      {{"i", ParamKind::Value}})));
  out.push_back(lemma(schema(
      "LEM5_3", "(>0)dia((j)A /\\ E) -> (E -> (j)A)", {"A", "E"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        TruthValue j = val(p, "j", c);
        const F &a = s.at("A"), &e = s.at("E");
        return F::imp(gt(TruthValue::zero(c.n), F::dia(F::min(F::coef(j, a), e))), F::imp(e, F::coef(j, a)));
      },
      {{"j", ParamKind::Value}}, {{"E", SideCondition::Mec}})));
  out.push_back(lemma(mec1("LEM5_4", "i")));
  out.push_back(lemma(schema(
      "BOX_GE", "(>=i)box C <-> (>=i)box (>=i)C", {"C"},
      [](const Subst& s, const Params& p, const SchemaContext& c) -> std::optional<F> {
        TruthValue i = val(p, "i", c);
        const F& x = s.at("C");
        return F::iff(ge(i, F::box(x)), ge(i, F::box(ge(i, x))));
      },
      {{"i", ParamKind::Value}})));
  return out;
}

std::vector<Schema> build_qfl2() {
  std::vector<Schema> out;
  out.push_back(lemma(schema("QPL1", "(A <| B) \\/ (B <| A)", {"A", "B"},
                             [](const Subst& s, const Params&, const SchemaContext&) {
                               const F &a = s.at("A"), &b = s.at("B");
                               return F::max(F::comp(a, b), F::comp(b, a));
                             })));
  out.push_back(lemma(schema("QPL2", "(A <| B) -> ((A \\/ C) <| (B \\/ C))", {"A", "B", "C"},
                             [](const Subst& s, const Params&, const SchemaContext&) {
                               const F &a = s.at("A"), &b = s.at("B"), &c = s.at("C");
                               return F::imp(F::comp(a, b), F::comp(F::max(a, c), F::max(b, c)));
                             })));
  out.push_back(lemma(schema("QPL3", "A <| top", {"A"}, [](const Subst& s, const Params&, const SchemaContext&) {
    return F::comp(s.at("A"), F::top());
  })));
  out.push_back(lemma(schema("QPL4", "!(top <| bot)", {}, [](const Subst&, const Params&, const SchemaContext&) {
    return F::neg(F::comp(F::top(), F::bot()));
  })));
  return out;
}

bool match_into(const Formula& pat, const Formula& f, Subst& out) {
  if (pat.op() == Op::Atom && !pat.name().empty() && pat.name()[0] == '?') {
    std::string mv = pat.name().substr(1);
    auto it = out.find(mv);
    if (it == out.end()) {
      out.emplace(mv, f);
      return true;
    }
    return it->second == f;
  }
  if (pat.op() != f.op() || pat.arity() != f.arity()) return false;
  if (pat.name() != f.name() || pat.count() != f.count()) return false;
  switch (pat.op()) {
    case Op::Coef:
    case Op::CoefGe:
    case Op::CoefLe:
    case Op::CoefGt:
    case Op::CoefLt:
    case Op::Goedel:
      if (pat.value() != f.value()) return false;
      break;
    default:
      break;
  }
  for (std::size_t k = 0; k < pat.arity(); ++k) {
    if (!match_into(pat.child(k), f.child(k), out)) return false;
  }
  return true;
}

}  // namespace

const std::vector<Schema>& catalog(System s) {
  static const std::vector<Schema> ln = build_ln();
  static const std::vector<Schema> mvs5 = build_mvs5();
  static const std::vector<Schema> mvkd45 = build_mvkd45();
  static const std::vector<Schema> qfl2 = build_qfl2();
  switch (s) {
    case System::Ln:
      return ln;
    case System::Mvs5:
      return mvs5;
    case System::Mvkd45:
      return mvkd45;
    case System::Qfl2:
      return qfl2;
  }
  return ln;
}

const Schema& find_schema(System s, std::string_view id) {
  for (const auto& sc : catalog(s)) {
    if (sc.id == id) return sc;
  }
  throw ProofError("unknown schema '" + std::string(id) + "' in system " + std::string(system_name(s)));
}

std::pair<int, int> param_range(const ParamSpec& p, Resolution n) {
  switch (p.kind) {
    case ParamKind::Value:
      return {0, n.denominator()};
    case ParamKind::Count:
      return {1, n.n()};
    case ParamKind::Connective:
      return {0, static_cast<int>(connectives().size()) - 1};
  }
  return {0, 0};
}

std::optional<std::string> side_condition_violation(SideCondition c, const Formula& f, const SchemaContext& ctx) {
  switch (c) {
    case SideCondition::Any:
      return std::nullopt;
    case SideCondition::B0:
      if (is_b0(f)) return std::nullopt;
      return print(f) + " is not a B0-formula";
    case SideCondition::BFormula:
      if (is_b_formula(f)) return std::nullopt;
      return print(f) + " is not a B-formula";
    case SideCondition::Mec: {
      auto atoms = normalize_atoms(ctx.atoms);
      if (!atoms.empty() && classify(f, &atoms).count(FormulaClass::Mec)) return std::nullopt;
      return print(f) + " is not a maximal elementary conjunction over the declared atoms";
    }
  }
  return std::nullopt;
}

Formula instantiate(const Schema& s, const Subst& subst, const Params& params, const SchemaContext& ctx) {
  for (const auto& mv : s.metavars) {
    auto it = subst.find(mv);
    if (it == subst.end()) throw ProofError("schema " + s.id + ": metavariable " + mv + " is not bound");
    if (auto why = side_condition_violation(s.condition(mv), it->second, ctx)) {
      throw ProofError("schema " + s.id + ": side condition on " + mv + " violated: " + *why);
    }
  }
  for (const auto& [k, v] : subst) {
    if (std::find(s.metavars.begin(), s.metavars.end(), k) == s.metavars.end()) {
      throw ProofError("schema " + s.id + " has no metavariable " + k);
    }
  }
  for (const auto& p : s.params) {
    auto it = params.find(p.name);
    if (it == params.end()) throw ProofError("schema " + s.id + ": parameter " + p.name + " is missing");
    auto [lo, hi] = param_range(p, ctx.n);
    if (it->second < lo || it->second > hi) {
      throw ProofError("schema " + s.id + ": parameter " + p.name + " out of range");
    }
  }
  for (const auto& [k, v] : params) {
    bool known = std::any_of(s.params.begin(), s.params.end(), [&](const ParamSpec& p) { return p.name == k; });
    if (!known) throw ProofError("schema " + s.id + " has no parameter " + k);
  }
  auto f = s.build(subst, params, ctx);
  if (!f) throw ProofError("schema " + s.id + ": parameters violate the schema's constraint");
  return *f;
}

std::optional<SchemaMatch> match_schema(const Schema& s, const Formula& f, const SchemaContext& ctx,
                                        const Params& fixed) {
  Subst pattern_subst;
  for (const auto& mv : s.metavars) pattern_subst.emplace(mv, Formula::atom("?" + mv));
  std::vector<ParamSpec> free;
  Params params;
  for (const auto& p : s.params) {
    auto it = fixed.find(p.name);
    if (it != fixed.end()) {
      params[p.name] = it->second;
    } else {
      free.push_back(p);
      params[p.name] = param_range(p, ctx.n).first;
    }
  }
  while (true) {
    if (auto pat = s.build(pattern_subst, params, ctx)) {
      Subst got;
      if (match_into(*pat, f, got)) {
        bool ok = got.size() == s.metavars.size();
        for (const auto& [mv, g] : got) ok = ok && !side_condition_violation(s.condition(mv), g, ctx);
        if (ok) return SchemaMatch{std::move(got), params};
      }
    }
    std::size_t k = free.size();
    while (k > 0) {
      const auto& p = free[k - 1];
      if (params[p.name] < param_range(p, ctx.n).second) {
        ++params[p.name];
        break;
      }
      params[p.name] = param_range(p, ctx.n).first;
      --k;
    }
    if (k == 0) return std::nullopt;
  }
}

}  // namespace mvmodal
