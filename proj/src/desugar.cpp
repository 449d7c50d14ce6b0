#include "mvmodal/formula.hpp"

namespace mvmodal {
namespace {

Formula top_core() {
  Formula t = Formula::atom(std::string(kTruePlaceholder));
  return Formula::imp(t, t);
}

Formula coef_chain(Op op, TruthValue i, const Formula& a) {
  std::optional<Formula> acc;
  for (TruthValue j : all_values(i.resolution())) {
    bool keep = (op == Op::CoefGe && j >= i) || (op == Op::CoefLe && j <= i) ||
                (op == Op::CoefGt && j > i) || (op == Op::CoefLt && j < i);
    if (!keep) continue;
    Formula c = Formula::coef(j, a);
    acc = acc ? Formula::max(*acc, c) : c;
  }
  return acc ? *acc : Formula::neg(top_core());
}

Formula dia_p_core(const Formula& a, const std::string& p) {
  return Formula::dia(Formula::min(Formula::atom(p), a));
}

Formula repeat(Op op, int k, const Formula& a) {
  Formula acc = a;
  for (int t = 1; t < k; ++t) acc = Formula::make(op, {acc, a});
  return acc;
}

Formula expand(const Formula& f) {
  if (f.arity() == 0) {
    if (f.op() == Op::Top) return top_core();
    if (f.op() == Op::Bot) return Formula::neg(top_core());
    return f;
  }
  std::vector<Formula> kids;
  bool changed = false;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    kids.push_back(expand(f.child(i)));
    changed = changed || kids.back().id() != f.child(i).id();
  }
  switch (f.op()) {
    case Op::CoefGe:
    case Op::CoefLe:
    case Op::CoefGt:
    case Op::CoefLt:
      return coef_chain(f.op(), f.value(), kids[0]);
    case Op::DiaP:
      return dia_p_core(kids[0], f.name());
    case Op::BoxP:
      return Formula::box(Formula::max(Formula::neg(Formula::atom(f.name())), kids[0]));
    case Op::CompP:
      return Formula::imp(dia_p_core(kids[0], f.name()), dia_p_core(kids[1], f.name()));
    case Op::NComp:
      return Formula::neg(Formula::imp(dia_p_core(Formula::neg(kids[0]), f.name()),
                                       dia_p_core(Formula::neg(kids[1]), f.name())));
    case Op::Dienes:
      return Formula::max(Formula::neg(kids[0]), kids[1]);
    case Op::Goedel:
      return Formula::max(Formula::coef(f.value(), Formula::imp(kids[0], kids[1])), kids[1]);
    case Op::Sum:
      return repeat(Op::SDisj, f.count(), kids[0]);
    case Op::Prod:
      return repeat(Op::SConj, f.count(), kids[0]);
    default:
      break;
  }
  if (!changed) return f;
  std::optional<TruthValue> value;
  if (f.op() == Op::Coef) value = f.value();
  return Formula::make(f.op(), std::move(kids), f.name(), value);
}

}  // namespace

Formula desugar(const Formula& f) { return expand(f); }

}  // namespace mvmodal
