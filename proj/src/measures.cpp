#include "mvmodal/measures.hpp"

#include <algorithm>

#include "mvmodal/semantics.hpp"

namespace mvmodal {

std::vector<std::string> validate(const PossibilityAssignment& a) {
  std::vector<std::string> errs;
  if (a.atoms.empty()) errs.push_back("assignment declares no atoms");
  if (normalize_atoms(a.atoms) != a.atoms) errs.push_back("atoms must be sorted and distinct");
  if (!errs.empty()) return errs;
  std::size_t expected = a.mecs().size();
  if (a.table.size() != expected) {
    errs.push_back("table has " + std::to_string(a.table.size()) + " entries, expected " +
                   std::to_string(expected));
    return errs;
  }
  bool has_one = false;
  for (const auto& v : a.table) {
    if (v.resolution() != a.n) {
      errs.push_back("table value of the wrong resolution");
      return errs;
    }
    has_one = has_one || v.is_one();
  }
  if (!has_one) errs.push_back("no mec has possibility 1");
  return errs;
}

namespace {

void require(const PossibilityAssignment& a) {
  auto errs = validate(a);
  if (errs.empty()) return;
  std::string msg = "invalid possibility assignment:";
  for (const auto& e : errs) msg += " " + e + ";";
  throw ModelError(msg);
}

/// Pi of a Boolean formula: largest table value over mecs where it is 1.
TruthValue boolean_measure(const PossibilityAssignment& a, const std::vector<Mec>& mecs, const Formula& b) {
  TruthValue best = TruthValue::zero(a.n);
  for (std::size_t k = 0; k < mecs.size(); ++k) {
    if (eval_prop(b, a.atoms, mecs[k].values, a.n).is_one()) best = tmax(best, a.table[k]);
  }
  return best;
}

TruthValue decomposed(const PossibilityAssignment& a, const std::vector<Mec>& mecs, const Formula& f) {
  if (!is_modal_free(f)) throw EvalError("measure_of needs a modal-free formula");
  for (const auto& atom : atoms_of(f)) {
    if (!std::binary_search(a.atoms.begin(), a.atoms.end(), atom)) {
      throw EvalError("atom '" + atom + "' is not declared by the assignment");
    }
  }
  TruthValue out = TruthValue::zero(a.n);
  for (TruthValue i : all_values(a.n)) {
    out = tmax(out, tmin(i, boolean_measure(a, mecs, Formula::coef(i, f))));
  }
  return out;
}

}  // namespace

TruthValue measure_of(const PossibilityAssignment& a, const Formula& f) {
  require(a);
  return decomposed(a, a.mecs(), f);
}

MeasureReport check_measure(const PossibilityAssignment& a, const std::vector<Formula>& family,
                            const std::vector<std::pair<Formula, Formula>>& equivalent) {
  MeasureReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  for (const auto& e : validate(a)) {
    if (e != "no mec has possibility 1") fail(e);
  }
  if (!rep.ok) return rep;
  auto mecs = a.mecs();
  auto pi = [&](const Formula& f) { return decomposed(a, mecs, f); };
  rep.checks += 2;
  if (TruthValue t = pi(Formula::top()); !t.is_one()) fail("Pi1: Pi(True) = " + t.str());
  if (TruthValue b = pi(Formula::bot()); !b.is_zero()) fail("Pi1: Pi(False) = " + b.str());
  for (std::size_t x = 0; x < family.size(); ++x) {
    TruthValue px = pi(family[x]);
    for (std::size_t y = x; y < family.size(); ++y) {
      ++rep.checks;
      TruthValue pj = pi(Formula::max(family[x], family[y]));
      if (pj != tmax(px, pi(family[y]))) {
        fail("Pi2: Pi(" + print(family[x]) + " \\/ " + print(family[y]) + ") = " + pj.str());
      }
    }
    ++rep.checks;
    TruthValue join = TruthValue::zero(a.n);
    for (TruthValue i : all_values(a.n)) join = tmax(join, tmin(i, pi(Formula::coef(i, family[x]))));
    if (join != px) fail("Pi4: decomposition of " + print(family[x]) + " gives " + join.str());
  }
  for (const auto& [f, g] : equivalent) {
    ++rep.checks;
    if (pi(f) != pi(g)) fail("Pi3: Pi(" + print(f) + ") != Pi(" + print(g) + ")");
  }
  return rep;
}

PossibilisticModel reconstruct_model(const PossibilityAssignment& a) {
  require(a);
  PossibilisticModel m;
  m.n = a.n;
  m.atoms = a.atoms;
  auto mecs = a.mecs();
  for (std::size_t k = 0; k < mecs.size(); ++k) {
    m.worlds.push_back(World{"w" + std::to_string(k), mecs[k].values});
    m.pi.push_back(a.table[k]);
  }
  return m;
}

PossibilityAssignment measure_from_model(const PossibilisticModel& m) {
  require_valid(m);
  PossibilisticModel sorted = m;
  auto atoms = normalize_atoms(m.atoms);
  if (atoms != m.atoms) {
    sorted.atoms = atoms;
    for (std::size_t w = 0; w < m.worlds.size(); ++w) {
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        sorted.worlds[w].val[a] = m.worlds[w].val[*m.atom_index(atoms[a])];
      }
    }
  }
  PossibilityAssignment out;
  out.n = m.n;
  out.atoms = atoms;
  for (const auto& e : out.mecs()) out.table.push_back(possibility(e.formula(), sorted));
  return out;
}

}  // namespace mvmodal
