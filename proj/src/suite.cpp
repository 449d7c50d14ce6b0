#include "mvmodal/suite.hpp"

#include <algorithm>
#include <functional>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "mvmodal/batch_eval.hpp"
#include "mvmodal/generate.hpp"

namespace mvmodal {
namespace {

struct Leveled {
  Formula f;
  int level;
};

Signature pool_signature(System s, const std::vector<std::string>& atoms, Resolution r) {
  switch (s) {
    case System::Ln:
      return form0_signature(atoms, r);
    case System::Mvs5:
    case System::Mvkd45:
      return modal_signature(atoms, r);
    case System::Qfl2:
      return qfl2_signature(atoms, r);
  }
  return form0_signature(atoms, r);
}

/// Value-table fingerprints of formulas over every canonical model.
class Fingerprints {
 public:
  Fingerprints(Variant v, const std::vector<std::string>& atoms, Resolution r, const DecideOptions& opts,
               int max_support)
      : v_(v), atoms_(atoms), r_(r), opts_(opts), support_(max_support) {}

  std::vector<std::pair<std::uint64_t, std::uint64_t>> of(const std::vector<Formula>& fs) const {
    std::vector<Formula> core;
    for (const auto& f : fs) core.push_back(desugar(f));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out(fs.size(), {1469598103934665603ull, 7ull});
    CanonicalEnumerator e(model_class(v_), atoms_, r_, opts_.limits, support_);
    BatchEvaluator be(e.types(), v_);
    ModelBatch b;
    while (e.next(b, opts_.batch_lanes)) {
      be.load(b);
      for (std::size_t k = 0; k < core.size(); ++k) {
        const std::uint8_t* t = be.table(core[k]);
        std::size_t cells = static_cast<std::size_t>(b.rows) * b.lanes;
        auto& [h1, h2] = out[k];
        for (std::size_t c = 0; c < cells; ++c) {
          h1 = (h1 ^ t[c]) * 1099511628211ull;
          h2 = h2 * 0x9E3779B97F4A7C15ull + t[c] + 1;
        }
        h1 ^= static_cast<std::uint64_t>(b.rows) << 56;
        be.trim(std::size_t{64} << 20);
      }
    }
    return out;
  }

 private:
  Variant v_;
  std::vector<std::string> atoms_;
  Resolution r_;
  DecideOptions opts_;
  int support_;
};

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
    return static_cast<std::size_t>(p.first ^ (p.second * 31));
  }
};

/// Keeps the first formula of each value-table class.
std::vector<Leveled> dedup(std::vector<Leveled> pool, const Fingerprints* fp) {
  if (fp == nullptr) return pool;
  std::vector<Formula> fs;
  for (const auto& l : pool) fs.push_back(l.f);
  auto keys = fp->of(fs);
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> seen;
  std::vector<Leveled> out;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (seen.insert(keys[k]).second) out.push_back(pool[k]);
  }
  return out;
}

std::vector<Leveled> general_pool(const Signature& sig, int depth) {
  std::vector<Leveled> out;
  for (const auto& f : formulas_up_to_depth(sig, depth)) out.push_back({f, static_cast<int>(f.depth())});
  return out;
}

/// Boolean candidates: (i)X for every pool formula X at X's level, plus
/// connective combinations of the level-0 ones (i)p at level 1.
std::vector<Leveled> boolean_pool(const std::vector<Leveled>& general, const Signature& sig, SideCondition c) {
  std::vector<Leveled> out;
  std::vector<Formula> base;
  for (const auto& g : general) {
    if (g.f.op() == Op::Top || g.f.op() == Op::Bot) continue;
    for (TruthValue i : sig.coefs) {
      Formula f = Formula::coef(i, g.f);
      if (c == SideCondition::B0 && !is_b0(f)) continue;
      out.push_back({f, g.level});
      if (g.level == 0) base.push_back(f);
    }
  }
  for (const auto& a : base) out.push_back({Formula::neg(a), 1});
  for (Op op : sig.binary) {
    if (op == Op::Comp) continue;
    for (const auto& a : base) {
      for (const auto& b : base) out.push_back({Formula::make(op, {a, b}), 1});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Leveled& x, const Leveled& y) { return x.level < y.level; });
  return out;
}

std::vector<Params> param_combos(const Schema& s, Resolution n) {
  std::vector<Params> out;
  Params p;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == s.params.size()) {
      out.push_back(p);
      return;
    }
    auto [lo, hi] = param_range(s.params[k], n);
    for (int v = lo; v <= hi; ++v) {
      p[s.params[k].name] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

SuiteReport axiom_suite(const SuiteOptions& opts) {
  SuiteReport rep;
  rep.system = opts.system;
  rep.variant = system_variant(opts.system);
  rep.n = opts.n;
  rep.atoms = normalize_atoms(opts.atoms);
  rep.depth = opts.depth;
  if (rep.atoms.empty()) throw Error("axiom suite needs at least one atom");
  const SchemaContext ctx{opts.n, rep.atoms};
  const Signature sig = pool_signature(opts.system, rep.atoms, opts.n);

  std::optional<Fingerprints> fp;
  if (opts.dedup) fp.emplace(rep.variant, rep.atoms, opts.n, opts.decide, opts.system == System::Ln ? 1 : -1);
  const Fingerprints* fpp = fp ? &*fp : nullptr;

  auto raw = general_pool(sig, opts.depth);
  auto general = dedup(raw, fpp);
  std::optional<std::vector<Leveled>> b0;
  std::optional<std::vector<Leveled>> bf;
  auto pool_for = [&](SideCondition c) -> const std::vector<Leveled>& {
    if (c == SideCondition::B0) {
      if (!b0) b0 = dedup(boolean_pool(raw, sig, c), fpp);
      return *b0;
    }
    if (c == SideCondition::BFormula) {
      if (!bf) bf = dedup(boolean_pool(raw, sig, c), fpp);
      return *bf;
    }
    return general;
  };
  rep.pool = general.size();
  const auto mecs = mec_enumerate(rep.atoms, opts.n);

  std::vector<Formula> instances;
  std::vector<std::size_t> owner;
  for (const auto& s : catalog(opts.system)) {
    if (!s.axiom && !opts.lemmas) continue;
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), s.id) == opts.only.end()) continue;
    SchemaResult res;
    res.id = s.id;
    res.text = s.text;
    res.axiom = s.axiom;
    const std::size_t idx = rep.schemas.size();
    rep.schemas.push_back(res);

    std::vector<std::string> mv = s.metavars;
    for (const Params& p : param_combos(s, opts.n)) {
      Subst subst;
      std::function<void(std::size_t, int)> rec = [&](std::size_t k, int budget) {
        if (k == mv.size()) {
          if (auto f = s.build(subst, p, ctx)) {
            instances.push_back(*f);
            owner.push_back(idx);
          }
          return;
        }
        SideCondition c = s.condition(mv[k]);
        if (c == SideCondition::Mec) {
          for (const auto& e : mecs) {
            subst[mv[k]] = e.formula();
            rec(k + 1, budget);
          }
          return;
        }
        for (const auto& l : pool_for(c)) {
          if (l.level > budget) break;
          subst[mv[k]] = l.f;
          rec(k + 1, budget - l.level);
        }
      };
      rec(0, opts.depth);
    }
  }

  auto verdicts = run_checks(instances, rep.variant, rep.atoms, opts.n, opts.decide);
  for (std::size_t k = 0; k < instances.size(); ++k) {
    SchemaResult& res = rep.schemas[owner[k]];
    ++res.instances;
    if (!verdicts[k].is_tautology) {
      if (res.failures == 0) {
        res.first_failure = instances[k];
        res.witness = verdicts[k].countermodel;
      }
      ++res.failures;
    }
  }
  for (const auto& res : rep.schemas) {
    rep.instances += res.instances;
    rep.failures += res.failures;
  }
  return rep;
}

}  // namespace mvmodal
