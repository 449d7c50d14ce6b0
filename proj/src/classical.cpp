#include "mvmodal/classical.hpp"

#include <algorithm>

#include "mvmodal/generate.hpp"

namespace mvmodal {
namespace {

bool value(const Formula& f, const ClassicalModel& m, std::size_t w, ClassicalLogic logic) {
  auto kid = [&](std::size_t k, std::size_t at) { return value(f.child(k), m, at, logic); };
  auto sees = [&](std::size_t v) { return logic == ClassicalLogic::S5 || m.believed[v]; };
  switch (f.op()) {
    case Op::Atom: {
      auto it = std::find(m.atoms.begin(), m.atoms.end(), f.name());
      if (it == m.atoms.end()) {
        if (f.name() == kTruePlaceholder) return false;
        throw EvalError("atom '" + f.name() + "' is not in the classical model");
      }
      return m.worlds[w][static_cast<std::size_t>(it - m.atoms.begin())];
    }
    case Op::Neg:
      return !kid(0, w);
    case Op::Imp:
      return !kid(0, w) || kid(1, w);
    case Op::Min:
    case Op::SConj:
      return kid(0, w) && kid(1, w);
    case Op::Max:
    case Op::SDisj:
      return kid(0, w) || kid(1, w);
    case Op::Iff:
      return kid(0, w) == kid(1, w);
    case Op::Coef:
      if (f.value().resolution() != Resolution(2)) throw EvalError("classical oracle needs n = 2");
      return kid(0, w) == f.value().is_one();
    case Op::Box:
      for (std::size_t v = 0; v < m.worlds.size(); ++v) {
        if (sees(v) && !kid(0, v)) return false;
      }
      return true;
    case Op::Dia:
      for (std::size_t v = 0; v < m.worlds.size(); ++v) {
        if (sees(v) && kid(0, v)) return true;
      }
      return false;
    default:
      throw EvalError("classical oracle cannot evaluate " + print(f));
  }
}

}  // namespace

bool classical_value(const Formula& f, const ClassicalModel& m, std::size_t w, ClassicalLogic logic) {
  return value(desugar(f), m, w, logic);
}

bool classical_tautology(const Formula& f, const std::vector<std::string>& atoms, ClassicalLogic logic) {
  Formula core = desugar(f);
  const std::size_t types = std::size_t{1} << atoms.size();
  for (std::size_t set = 1; set < (std::size_t{1} << types); ++set) {
    ClassicalModel m;
    m.atoms = atoms;
    for (std::size_t t = 0; t < types; ++t) {
      if (!(set >> t & 1)) continue;
      std::vector<bool> val(atoms.size());
      for (std::size_t a = 0; a < atoms.size(); ++a) val[a] = (t >> (atoms.size() - 1 - a)) & 1;
      m.worlds.push_back(val);
    }
    const std::size_t w = m.worlds.size();
    const std::size_t belief_sets = logic == ClassicalLogic::S5 ? 2 : (std::size_t{1} << w);
    for (std::size_t b = 1; b < belief_sets; ++b) {
      m.believed.assign(w, true);
      if (logic == ClassicalLogic::KD45) {
        for (std::size_t k = 0; k < w; ++k) m.believed[k] = (b >> k) & 1;
      }
      for (std::size_t k = 0; k < w; ++k) {
        if (!value(core, m, k, logic)) return false;
      }
    }
  }
  return true;
}

DegenerateReport degenerate_n2(const std::vector<std::string>& atoms, int depth, const DecideOptions& opts) {
  const Resolution two(2);
  const auto sorted = normalize_atoms(atoms);
  std::vector<Formula> fs;
  for (const auto& f : formulas_up_to_depth(modal_signature(sorted, two), depth)) {
    if (!is_modal_free(f)) fs.push_back(f);
  }
  DegenerateReport rep;
  rep.formulas = fs.size();
  auto mvs5 = run_checks(fs, Variant::Mvs5, sorted, two, opts);
  auto mvkd45 = run_checks(fs, Variant::Mvkd45, sorted, two, opts);
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (mvs5[k].is_tautology != classical_tautology(fs[k], sorted, ClassicalLogic::S5)) {
      ++rep.mvs5_mismatches;
      if (rep.examples.size() < 5) rep.examples.push_back("mvs5: " + print(fs[k]));
    }
    if (mvkd45[k].is_tautology != classical_tautology(fs[k], sorted, ClassicalLogic::KD45)) {
      ++rep.mvkd45_mismatches;
      if (rep.examples.size() < 5) rep.examples.push_back("mvkd45: " + print(fs[k]));
    }
  }
  return rep;
}

}  // namespace mvmodal
