#include <algorithm>
#include <set>

#include "mvmodal/proofs.hpp"

namespace mvmodal {

SchemaContext proof_context(const Proof& p) {
  SchemaContext ctx{p.n, p.atoms};
  if (ctx.atoms.empty()) {
    std::set<std::string> all;
    for (const auto& f : p.premises) {
      auto a = atoms_of(f);
      all.insert(a.begin(), a.end());
    }
    for (const auto& l : p.lines) {
      auto a = atoms_of(l.formula);
      all.insert(a.begin(), a.end());
    }
    ctx.atoms.assign(all.begin(), all.end());
  }
  ctx.atoms = normalize_atoms(ctx.atoms);
  return ctx;
}

namespace {

bool modal_system(System s) { return s == System::Mvs5 || s == System::Mvkd45; }

ProofCheck fail(std::size_t line, std::string reason) { return ProofCheck{false, line, std::move(reason)}; }

/// Reason the formula is outside the system's language, if it is.
std::optional<std::string> language_violation(const Formula& f, const Proof& p) {
  if (p.system == System::Ln && !is_modal_free(f)) return "modal formula in an L_n proof: " + print(f);
  if (contains_op(f, Op::Comp) || contains_op(f, Op::CompP) || contains_op(f, Op::NComp)) {
    return "comparison formula in a proof: " + print(f);
  }
  try {
    check_formula(desugar(f), system_variant(p.system), p.n);
  } catch (const Error& e) {
    return e.what();
  }
  return std::nullopt;
}

std::string describe(std::size_t k) { return "line " + std::to_string(k); }

}  // namespace

ProofCheck check_proof(const Proof& p) {
  if (p.system == System::Qfl2) return fail(0, "qfl2 has no proof system");
  if (p.lines.empty()) return fail(0, "proof has no lines");
  for (std::size_t k = 0; k < p.premises.size(); ++k) {
    const Formula& f = p.premises[k];
    if (auto why = language_violation(f, p)) return fail(0, "premise " + std::to_string(k + 1) + ": " + *why);
    if (modal_system(p.system) && !is_b_formula(f)) {
      return fail(0, "premise " + std::to_string(k + 1) + " is not a B-formula: " + print(f));
    }
  }
  const SchemaContext ctx = proof_context(p);
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const std::size_t no = i + 1;
    const ProofLine& line = p.lines[i];
    const Formula& f = line.formula;
    const Justification& j = line.just;
    if (auto why = language_violation(f, p)) return fail(no, *why);
    for (std::size_t r : j.refs) {
      if (r < 1 || r >= no) return fail(no, "reference to " + describe(r) + " is not an earlier line");
    }
    auto ref = [&](std::size_t k) -> const Formula& { return p.lines[j.refs[k] - 1].formula; };
    switch (j.kind) {
      case Justification::Kind::Premise:
        if (j.premise < 1 || j.premise > p.premises.size()) return fail(no, "no such premise");
        if (!(p.premises[j.premise - 1] == f)) return fail(no, "formula differs from the cited premise");
        break;
      case Justification::Kind::Axiom: {
        const Schema* s = nullptr;
        try {
          s = &find_schema(p.system, j.schema);
        } catch (const ProofError& e) {
          return fail(no, e.what());
        }
        if (!s->axiom) return fail(no, "schema " + s->id + " is a lemma, not an axiom");
        if (j.subst) {
          Formula inst;
          try {
            inst = instantiate(*s, *j.subst, j.params, ctx);
          } catch (const Error& e) {
            return fail(no, e.what());
          }
          if (!(inst == f)) return fail(no, "formula is not the stated instance of " + s->id + ": " + print(inst));
        } else if (!match_schema(*s, f, ctx, j.params)) {
          return fail(no, "formula is not an instance of " + s->id);
        }
        break;
      }
      case Justification::Kind::MP: {
        if (j.refs.size() != 2) return fail(no, "modus ponens needs two lines");
        const Formula &a = ref(0), &b = ref(1);
        bool ok = (b.op() == Op::Imp && b.lhs() == a && b.rhs() == f) ||
                  (a.op() == Op::Imp && a.lhs() == b && a.rhs() == f);
        if (!ok) return fail(no, "modus ponens does not yield this formula");
        break;
      }
      case Justification::Kind::Nec:
        if (!modal_system(p.system)) return fail(no, "necessitation is not a rule of " + std::string(system_name(p.system)));
        if (!p.premises.empty()) return fail(no, "necessitation is disabled in proofs from premises");
        if (j.refs.size() != 1) return fail(no, "necessitation needs one line");
        if (!(f.op() == Op::Box && f.child(0) == ref(0))) return fail(no, "necessitation does not yield this formula");
        break;
      case Justification::Kind::CoefOne:
        if (!modal_system(p.system)) return fail(no, "rule (1) is not a rule of " + std::string(system_name(p.system)));
        if (j.refs.size() != 1) return fail(no, "rule (1) needs one line");
        if (!(f.op() == Op::Coef && f.value() == TruthValue::one(p.n) && f.child(0) == ref(0))) {
          return fail(no, "rule (1) does not yield this formula");
        }
        break;
    }
  }
  return ProofCheck{};
}

SpotcheckReport soundness_spotcheck(const Proof& p, const DecideOptions& opts) {
  if (!p.premises.empty()) throw ProofError("soundness spotcheck needs a premise-free proof");
  if (p.system == System::Qfl2) throw ProofError("qfl2 has no proof system");
  SpotcheckReport rep;
  Variant v = system_variant(p.system);
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    SpotcheckLine out;
    out.line = i + 1;
    auto set = atoms_of(p.lines[i].formula);
    std::vector<std::string> atoms(set.begin(), set.end());
    if (atoms.empty()) atoms.push_back("q");
    try {
      Verdict vd = is_one_tautology(p.lines[i].formula, v, atoms, p.n, opts);
      out.tautology = vd.is_tautology;
      out.countermodel = std::move(vd.countermodel);
      rep.ok = rep.ok && vd.is_tautology;
    } catch (const CapExceeded&) {
      out.skipped = true;
      rep.partial = true;
    }
    rep.lines.push_back(std::move(out));
  }
  return rep;
}

}  // namespace mvmodal
