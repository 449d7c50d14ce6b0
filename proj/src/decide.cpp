#include "mvmodal/decide.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "mvmodal/batch_eval.hpp"

namespace mvmodal {

ModelClass model_class(Variant v) { return v == Variant::Mvs5 ? ModelClass::Mvs5 : ModelClass::Possibilistic; }

namespace {

void collect_modal(const Formula& f, std::unordered_set<Formula, FormulaHash>& modal,
                   std::unordered_set<Formula, FormulaHash>& comp) {
  if (f.op() == Op::Box || f.op() == Op::Dia) modal.insert(f);
  if (f.op() == Op::Comp) comp.insert(f);
  for (std::size_t i = 0; i < f.arity(); ++i) collect_modal(f.child(i), modal, comp);
}

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kCacheBudget = std::size_t{64} << 20;

struct Best {
  std::uint64_t index = kNone;
  std::optional<Countermodel> cm;
};

}  // namespace

int witness_bound(const Formula& f, Variant v) {
  std::unordered_set<Formula, FormulaHash> modal;
  std::unordered_set<Formula, FormulaHash> comp;
  collect_modal(desugar(f), modal, comp);
  if (modal.empty() && comp.empty()) return 1;
  int k = static_cast<int>(modal.size());
  int c = static_cast<int>(comp.size());
  switch (v) {
    case Variant::Mvs5:
      return k + 1;
    case Variant::Mvkd45:
    case Variant::AltBox:
      return k + 2;
    case Variant::Qfl2:
      return 2 * c + 2;
  }
  return k + 2 * c + 2;
}

std::vector<Verdict> run_checks(const std::vector<Formula>& fs, Variant v, const std::vector<std::string>& atoms,
                                Resolution r, const DecideOptions& opts) {
  const auto atom_list = normalize_atoms(atoms);
  std::vector<Formula> core;
  std::vector<int> bound;
  int max_bound = 1;
  for (const auto& f : fs) {
    Formula c = desugar(f);
    check_formula(c, v, r);
    for (const auto& a : atoms_of(c)) {
      if (!std::binary_search(atom_list.begin(), atom_list.end(), a)) {
        throw Error("atom '" + a + "' is missing from the atom list");
      }
    }
    bound.push_back(opts.use_bound ? witness_bound(c, v) : std::numeric_limits<int>::max());
    max_bound = std::max(max_bound, bound.back());
    core.push_back(std::move(c));
  }
  std::vector<Verdict> out(fs.size());
  if (fs.empty()) return out;

  const ModelClass cls = model_class(v);
  CanonicalEnumerator e(cls, atom_list, r, opts.limits, opts.use_bound ? max_bound : -1);
  std::vector<Best> best(fs.size());
  std::mutex mu;

  auto worker = [&]() {
    BatchEvaluator be(e.types(), v);
    ModelBatch b;
    while (true) {
      std::vector<std::size_t> todo;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (!e.next(b, opts.batch_lanes)) return;
        for (std::size_t c = 0; c < core.size(); ++c) {
          if (b.rows <= bound[c] && b.first_index < best[c].index) todo.push_back(c);
        }
      }
      if (todo.empty()) {
        bool more = false;
        std::lock_guard<std::mutex> lock(mu);
        for (std::size_t c = 0; c < core.size(); ++c) more = more || (best[c].index == kNone && b.rows < bound[c]);
        if (!more) return;
        continue;
      }
      be.load(b);
      for (std::size_t c : todo) {
        const std::uint8_t* t = be.table(core[c]);
        auto fail = be.first_failure(t);
        if (fail) {
          auto [lane, row] = *fail;
          std::uint64_t idx = b.first_index + lane;
          std::lock_guard<std::mutex> lock(mu);
          if (idx < best[c].index) {
            best[c].index = idx;
            TruthValue val(r, t[static_cast<std::size_t>(row) * b.lanes + lane]);
            std::string world = "w" + std::to_string(row);
            if (cls == ModelClass::Mvs5) {
              best[c].cm = Countermodel{e.mvs5_model(b, lane), world, val};
            } else {
              best[c].cm = Countermodel{e.possibilistic_model(b, lane, opts.reserved), world, val};
            }
          }
        }
        be.trim(kCacheBudget);
      }
    }
  };

  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::size_t c = 0; c < core.size(); ++c) {
    Verdict& vd = out[c];
    if (best[c].index == kNone) {
      vd.is_tautology = true;
      vd.models_checked = canonical_count(cls, e.types().count(), r, opts.use_bound ? bound[c] : -1);
      continue;
    }
    vd.is_tautology = false;
    vd.models_checked = best[c].index + 1;
    vd.countermodel = std::move(best[c].cm);
    const Countermodel& cm = *vd.countermodel;
    TruthValue again = std::visit(
        [&](const auto& m) {
          return Evaluator(m, v).at(core[c], std::string_view(cm.world));
        },
        cm.model);
    if (again != cm.value || cm.value.is_one()) {
      throw InternalError("countermodel for " + print(fs[c]) + " re-evaluates to " + again.str() +
                          " instead of " + cm.value.str());
    }
  }
  return out;
}

Verdict is_one_tautology(const Formula& f, Variant v, const std::vector<std::string>& atoms, Resolution r,
                         const DecideOptions& opts) {
  return run_checks({f}, v, atoms, r, opts).front();
}

Verdict entails(const std::vector<Formula>& premises, const Formula& f, Variant v,
                const std::vector<std::string>& atoms, Resolution r, const DecideOptions& opts) {
  if (premises.empty()) return is_one_tautology(f, v, atoms, r, opts);
  Formula all = premises.front();
  for (std::size_t i = 1; i < premises.size(); ++i) all = Formula::min(all, premises[i]);
  Formula g = Formula::imp(Formula::coef(TruthValue::one(r), all), f);
  return is_one_tautology(g, v, atoms, r, opts);
}

Verdict equiv_check(const Formula& f, const Formula& g, Variant v, const std::vector<std::string>& atoms,
                    Resolution r, const DecideOptions& opts) {
  return is_one_tautology(Formula::iff(f, g), v, atoms, r, opts);
}

}  // namespace mvmodal
