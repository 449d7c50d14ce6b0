#include "mvmodal/semantics.hpp"

#include <algorithm>

namespace mvmodal {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Mvs5:
      return "mvs5";
    case Variant::Mvkd45:
      return "mvkd45";
    case Variant::AltBox:
      return "altbox";
    case Variant::Qfl2:
      return "qfl2";
  }
  return "?";
}

Variant parse_variant(std::string_view name) {
  if (name == "mvs5") return Variant::Mvs5;
  if (name == "mvkd45") return Variant::Mvkd45;
  if (name == "altbox") return Variant::AltBox;
  if (name == "qfl2") return Variant::Qfl2;
  throw Error("unknown semantics variant '" + std::string(name) + "'");
}

namespace {

void check_core(const Formula& f, Variant v, Resolution r) {
  switch (f.op()) {
    case Op::Comp:
      if (v != Variant::Qfl2) {
        throw EvalError("'<|' is interpreted only by the qfl2 variant, not " + std::string(variant_name(v)));
      }
      break;
    case Op::Box:
    case Op::Dia:
      if (v == Variant::Qfl2) throw EvalError("box and dia are not part of the qfl2 language");
      break;
    case Op::Coef:
      if (f.value().resolution() != r) {
        throw EvalError("coefficient " + f.value().fraction() + " does not match n = " + std::to_string(r.n()));
      }
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) check_core(f.child(i), v, r);
}

}  // namespace

void check_formula(const Formula& f, Variant v, Resolution r) { check_core(desugar(f), v, r); }

Evaluator::Evaluator(const Mvs5Model& m, Variant v) : r_(m.n), v_(v), atoms_(m.atoms) {
  if (v != Variant::Mvs5) {
    throw EvalError(std::string("variant ") + std::string(variant_name(v)) + " needs a possibilistic model");
  }
  require_valid(m);
  for (const auto& w : m.worlds) {
    ids_.push_back(w.id);
    for (const auto& x : w.val) vals_.push_back(static_cast<std::uint8_t>(x.num()));
  }
}

Evaluator::Evaluator(const PossibilisticModel& m, Variant v) : r_(m.n), v_(v) {
  require_valid(m);
  if (v == Variant::Mvs5) {
    Mvs5Model ext = p_extension(m);
    atoms_ = ext.atoms;
    for (const auto& w : ext.worlds) {
      ids_.push_back(w.id);
      for (const auto& x : w.val) vals_.push_back(static_cast<std::uint8_t>(x.num()));
    }
    return;
  }
  atoms_ = m.atoms;
  for (std::size_t w = 0; w < m.worlds.size(); ++w) {
    ids_.push_back(m.worlds[w].id);
    for (const auto& x : m.worlds[w].val) vals_.push_back(static_cast<std::uint8_t>(x.num()));
    pi_.push_back(static_cast<std::uint8_t>(m.pi[w].num()));
  }
}

Formula Evaluator::prepare(const Formula& f) {
  auto it = prepared_.find(f.id());
  if (it != prepared_.end()) return it->second;
  Formula core = desugar(f);
  check_core(core, v_, r_);
  keep_.push_back(f);
  prepared_.emplace(f.id(), core);
  return core;
}

TruthValue Evaluator::at(const Formula& f, std::size_t world) {
  if (world >= ids_.size()) throw ModelError("world index out of range");
  return TruthValue(r_, node(prepare(f), world));
}

TruthValue Evaluator::at(const Formula& f, std::string_view world_id) {
  for (std::size_t w = 0; w < ids_.size(); ++w) {
    if (ids_[w] == world_id) return at(f, w);
  }
  throw ModelError("unknown world '" + std::string(world_id) + "'");
}

std::vector<TruthValue> Evaluator::all(const Formula& f) {
  Formula core = prepare(f);
  std::vector<TruthValue> out;
  for (std::size_t w = 0; w < ids_.size(); ++w) out.emplace_back(r_, node(core, w));
  return out;
}

std::uint8_t Evaluator::global(const Formula& f) {
  auto it = memo_.find(f.id());
  if (it != memo_.end()) return it->second;
  const int d = r_.denominator();
  const std::size_t worlds = ids_.size();
  int out = 0;
  switch (f.op()) {
    case Op::Dia: {
      int best = 0;
      for (std::size_t w = 0; w < worlds; ++w) {
        int a = node(f.child(0), w);
        if (v_ == Variant::Mvs5) {
          best = std::max(best, a);
        } else if (v_ == Variant::Mvkd45) {
          best = std::max(best, std::min<int>(pi_[w], a));
        } else {
          best = std::max(best, std::max(0, pi_[w] + a - d));
        }
      }
      out = best;
      break;
    }
    case Op::Box: {
      if (v_ == Variant::Mvkd45) {
        // box B = !dia !B
        int best = 0;
        for (std::size_t w = 0; w < worlds; ++w) best = std::max(best, std::min<int>(pi_[w], d - node(f.child(0), w)));
        out = d - best;
        break;
      }
      int worst = d;
      for (std::size_t w = 0; w < worlds; ++w) {
        int a = node(f.child(0), w);
        if (v_ == Variant::Mvs5) {
          worst = std::min(worst, a);
        } else {
          worst = std::min(worst, std::min(d, d - pi_[w] + a));
        }
      }
      out = worst;
      break;
    }
    case Op::Comp: {
      int pa = 0;
      int pb = 0;
      for (std::size_t w = 0; w < worlds; ++w) {
        pa = std::max(pa, std::min<int>(pi_[w], node(f.lhs(), w)));
        pb = std::max(pb, std::min<int>(pi_[w], node(f.rhs(), w)));
      }
      out = std::min(d, d - pa + pb);
      break;
    }
    default:
      throw InternalError("global() on a local node");
  }
  keep_.push_back(f);
  memo_.emplace(f.id(), static_cast<std::uint8_t>(out));
  return static_cast<std::uint8_t>(out);
}

std::uint8_t Evaluator::node(const Formula& f, std::size_t w) {
  auto tv = [&](std::uint8_t x) { return TruthValue(r_, x); };
  auto num = [](TruthValue x) { return static_cast<std::uint8_t>(x.num()); };
  switch (f.op()) {
    case Op::Atom: {
      for (std::size_t a = 0; a < atoms_.size(); ++a) {
        if (atoms_[a] == f.name()) return vals_[w * atoms_.size() + a];
      }
      if (f.name() == kTruePlaceholder) return 0;
      throw EvalError("atom '" + f.name() + "' is not declared by the model");
    }
    case Op::Neg:
      return num(neg(tv(node(f.child(0), w))));
    case Op::Imp:
      return num(imp(tv(node(f.lhs(), w)), tv(node(f.rhs(), w))));
    case Op::Min:
      return num(tmin(tv(node(f.lhs(), w)), tv(node(f.rhs(), w))));
    case Op::Max:
      return num(tmax(tv(node(f.lhs(), w)), tv(node(f.rhs(), w))));
    case Op::SConj:
      return num(sconj(tv(node(f.lhs(), w)), tv(node(f.rhs(), w))));
    case Op::SDisj:
      return num(sdisj(tv(node(f.lhs(), w)), tv(node(f.rhs(), w))));
    case Op::Iff:
      return num(equivalence(tv(node(f.lhs(), w)), tv(node(f.rhs(), w))));
    case Op::Coef:
      return tv(node(f.child(0), w)) == f.value() ? static_cast<std::uint8_t>(r_.denominator()) : 0;
    case Op::Box:
    case Op::Dia:
    case Op::Comp:
      return global(f);
    default:
      throw InternalError("sugar node reached the evaluator");
  }
}

TruthValue eval(const Formula& f, const Mvs5Model& m, std::string_view world, Variant v) {
  return Evaluator(m, v).at(f, world);
}

TruthValue eval(const Formula& f, const PossibilisticModel& m, std::string_view world, Variant v) {
  return Evaluator(m, v).at(f, world);
}

namespace {

bool has_box_or_dia(const Formula& core) { return contains_op(core, Op::Box) || contains_op(core, Op::Dia); }

}  // namespace

TruthValue possibility(const Formula& f, const PossibilisticModel& m) {
  Formula core = desugar(f);
  Evaluator ev(m, has_box_or_dia(core) ? Variant::Mvkd45 : Variant::Qfl2);
  auto vals = ev.all(core);
  TruthValue best = TruthValue::zero(m.n);
  for (std::size_t w = 0; w < vals.size(); ++w) best = tmax(best, tmin(m.pi[w], vals[w]));
  return best;
}

TruthValue necessity(const Formula& f, const PossibilisticModel& m) {
  return neg(possibility(Formula::neg(f), m));
}

namespace {

bool atoms_guarded(const Formula& core) {
  switch (core.op()) {
    case Op::Atom:
      return core.name() == kTruePlaceholder;
    case Op::Box:
    case Op::Dia:
    case Op::Comp:
      return true;
    default:
      break;
  }
  for (std::size_t i = 0; i < core.arity(); ++i) {
    if (!atoms_guarded(core.child(i))) return false;
  }
  return true;
}

TruthValue constant_value(Evaluator& ev, const Formula& f) {
  Formula core = desugar(f);
  if (!atoms_guarded(core)) throw EvalError("formula has an atom outside every modality: " + print(f));
  auto vals = ev.all(core);
  for (const auto& x : vals) {
    if (x != vals.front()) throw InternalError("world-constant formula varies across worlds: " + print(f));
  }
  return vals.front();
}

}  // namespace

TruthValue global_value(const Formula& f, const Mvs5Model& m, Variant v) {
  Evaluator ev(m, v);
  return constant_value(ev, f);
}

TruthValue global_value(const Formula& f, const PossibilisticModel& m, Variant v) {
  Evaluator ev(m, v);
  return constant_value(ev, f);
}

TruthValue eval_prop(const Formula& f, const std::vector<std::string>& atoms,
                     const std::vector<TruthValue>& val, Resolution r) {
  if (atoms.size() != val.size()) throw Error("valuation does not cover the atom list");
  if (!is_modal_free(f)) throw EvalError("eval_prop needs a modal-free formula");
  Mvs5Model m;
  m.n = r;
  m.atoms = atoms;
  m.worlds.push_back(World{"w", val});
  return Evaluator(m).at(f, std::size_t{0});
}

}  // namespace mvmodal
