#include "mvmodal/translate.hpp"

namespace mvmodal {
namespace {

void require_qfl2(const Formula& f) {
  switch (f.op()) {
    case Op::Box:
    case Op::Dia:
    case Op::DiaP:
    case Op::BoxP:
    case Op::CompP:
    case Op::NComp:
      throw EvalError("not a QFL2 formula: " + print(f));
    default:
      break;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) require_qfl2(f.child(i));
}

template <class CompFn>
Formula map_comp(const Formula& f, CompFn&& comp) {
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(map_comp(f.child(i), comp));
  if (f.op() == Op::Comp) return comp(kids[0], kids[1]);
  std::optional<TruthValue> value;
  switch (f.op()) {
    case Op::Coef:
    case Op::CoefGe:
    case Op::CoefLe:
    case Op::CoefGt:
    case Op::CoefLt:
    case Op::Goedel:
      value = f.value();
      break;
    default:
      break;
  }
  return Formula::make(f.op(), std::move(kids), f.name(), value, f.count());
}

}  // namespace

Formula star_mvs5(const Formula& f, const std::string& reserved) {
  require_qfl2(f);
  if (atoms_of(f).count(reserved)) throw EvalError("reserved atom '" + reserved + "' occurs in " + print(f));
  return map_comp(f, [&](const Formula& a, const Formula& b) { return Formula::comp_p(a, b, reserved); });
}

Formula star_star_mvs5(const Formula& f, Resolution r, const std::string& reserved) {
  return Formula::imp(Formula::coef(TruthValue::one(r), Formula::dia(Formula::atom(reserved))),
                      star_mvs5(f, reserved));
}

Formula star_mvkd45(const Formula& f) {
  require_qfl2(f);
  return map_comp(f, [](const Formula& a, const Formula& b) {
    return Formula::imp(Formula::dia(a), Formula::dia(b));
  });
}

}  // namespace mvmodal
