#include <algorithm>
#include <array>
#include <cstring>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "mvmodal/generate.hpp"
#include "mvmodal/kernels.hpp"
#include "mvmodal/translate.hpp"

namespace mvmodal {
namespace {

/// Points of a family of models: every world of every model, grouped by model.
struct Segment {
  std::vector<std::uint32_t> start;  // model m owns points [start[m], start[m + 1])
  std::vector<std::vector<std::uint8_t>> atom_vals;
  std::vector<std::uint8_t> weight;  // pi, or the reserved atom
  std::size_t points() const { return weight.size(); }
};

Segment possibilistic_segment(const std::vector<std::string>& atoms, Resolution r, const EnumLimits& lim) {
  CanonicalEnumerator e(ModelClass::Possibilistic, atoms, r, lim);
  Segment s;
  s.atom_vals.resize(atoms.size());
  s.start.push_back(0);
  ModelBatch b;
  while (e.next(b, 1024)) {
    for (std::size_t m = 0; m < b.lanes; ++m) {
      for (int row = 0; row < b.rows; ++row) {
        std::size_t c = static_cast<std::size_t>(row) * b.lanes + m;
        for (std::size_t a = 0; a < atoms.size(); ++a) s.atom_vals[a].push_back(e.types().digit(b.type[c], a));
        s.weight.push_back(b.pi[c]);
      }
      s.start.push_back(static_cast<std::uint32_t>(s.weight.size()));
    }
  }
  return s;
}

/// MVS5 models over atoms + {reserved}; the reserved atom becomes the weight.
Segment mvs5_segment(const std::vector<std::string>& atoms, const std::string& reserved, Resolution r,
                     const EnumLimits& lim) {
  auto ext = atoms;
  ext.push_back(reserved);
  CanonicalEnumerator e(ModelClass::Mvs5, ext, r, lim);
  const auto& sorted = e.types().atoms();
  std::vector<std::size_t> idx;
  for (const auto& a : atoms) idx.push_back(static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), a) - sorted.begin()));
  std::size_t pidx = static_cast<std::size_t>(std::find(sorted.begin(), sorted.end(), reserved) - sorted.begin());
  Segment s;
  s.atom_vals.resize(atoms.size());
  s.start.push_back(0);
  ModelBatch b;
  while (e.next(b, 1024)) {
    for (std::size_t m = 0; m < b.lanes; ++m) {
      for (int row = 0; row < b.rows; ++row) {
        std::size_t c = static_cast<std::size_t>(row) * b.lanes + m;
        for (std::size_t a = 0; a < atoms.size(); ++a) s.atom_vals[a].push_back(e.types().digit(b.type[c], idx[a]));
        s.weight.push_back(e.types().digit(b.type[c], pidx));
      }
      s.start.push_back(static_cast<std::uint32_t>(s.weight.size()));
    }
  }
  return s;
}

/// Signature layout: QFL2 table, A* on MVS5 models, A^ on MVKD45 models, A* on
/// p-extensions of the QFL2 models.
enum Part { kQfl2, kMvs5, kMvkd45, kPext, kParts };

struct Layout {
  std::array<Segment, kParts> seg;
  std::array<std::size_t, kParts + 1> off{};
  std::size_t size() const { return off[kParts]; }
};

struct Class {
  std::vector<std::uint8_t> t;
  Formula rep;
  bool qfl2 = false;
  bool mvs5 = false;
  bool mvkd45 = false;
  bool pairwise = true;
};

std::size_t table_hash(const std::vector<std::uint8_t>& t) {
  return std::hash<std::string_view>()(std::string_view(reinterpret_cast<const char*>(t.data()), t.size()));
}

class ClassBuilder {
 public:
  ClassBuilder(Layout& l, Resolution r) : l_(l), d_(static_cast<std::uint8_t>(r.denominator())), k_(simd::kernels()) {}

  /// Class id of the table, creating it with representative f if new.
  std::uint32_t intern(std::vector<std::uint8_t> t, const Formula& f) {
    std::size_t h = table_hash(t);
    auto& bucket = index_[h];
    for (std::uint32_t id : bucket) {
      if (classes_[id].t == t) return id;
    }
    Class c;
    c.t = std::move(t);
    c.rep = f;
    judge(c);
    classes_.push_back(std::move(c));
    bucket.push_back(static_cast<std::uint32_t>(classes_.size() - 1));
    return bucket.back();
  }

  std::vector<std::uint8_t> leaf_atom(std::size_t a) const {
    std::vector<std::uint8_t> t;
    for (const auto& s : l_.seg) t.insert(t.end(), s.atom_vals[a].begin(), s.atom_vals[a].end());
    return t;
  }
  std::vector<std::uint8_t> constant(std::uint8_t v) const { return std::vector<std::uint8_t>(l_.size(), v); }

  std::vector<std::uint8_t> unary(Op op, std::uint8_t coef, const std::vector<std::uint8_t>& a) const {
    std::vector<std::uint8_t> o(a.size());
    if (op == Op::Neg) {
      k_.neg(d_, a.data(), o.data(), a.size());
    } else {
      k_.coef(d_, coef, a.data(), o.data(), a.size());
    }
    return o;
  }

  std::vector<std::uint8_t> binary(Op op, const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) const {
    std::vector<std::uint8_t> o(a.size());
    const std::size_t n = a.size();
    switch (op) {
      case Op::Imp:
        k_.imp(d_, a.data(), b.data(), o.data(), n);
        break;
      case Op::Min:
        k_.tmin(d_, a.data(), b.data(), o.data(), n);
        break;
      case Op::Max:
        k_.tmax(d_, a.data(), b.data(), o.data(), n);
        break;
      case Op::SConj:
        k_.sconj(d_, a.data(), b.data(), o.data(), n);
        break;
      case Op::SDisj:
        k_.sdisj(d_, a.data(), b.data(), o.data(), n);
        break;
      case Op::Iff:
        k_.iff(d_, a.data(), b.data(), o.data(), n);
        break;
      case Op::Comp:
        for (int p = 0; p < kParts; ++p) compare(l_.seg[p], a.data() + l_.off[p], b.data() + l_.off[p], o.data() + l_.off[p]);
        break;
      default:
        throw InternalError("unexpected operator in the faithfulness enumeration");
    }
    return o;
  }

  std::vector<Class>& classes() { return classes_; }

 private:
  /// Per model: max(w /\ a) -> max(w /\ b), written to every point of the model.
  void compare(const Segment& s, const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* o) const {
    for (std::size_t m = 0; m + 1 < s.start.size(); ++m) {
      int pa = 0;
      int pb = 0;
      for (std::uint32_t x = s.start[m]; x < s.start[m + 1]; ++x) {
        pa = std::max(pa, std::min<int>(s.weight[x], a[x]));
        pb = std::max(pb, std::min<int>(s.weight[x], b[x]));
      }
      auto v = static_cast<std::uint8_t>(std::min<int>(d_, d_ - pa + pb));
      for (std::uint32_t x = s.start[m]; x < s.start[m + 1]; ++x) o[x] = v;
    }
  }

  bool all_one(const std::uint8_t* t, std::size_t n) const { return k_.find_ne(d_, t, n) == n; }

  void judge(Class& c) const {
    const std::uint8_t* t = c.t.data();
    c.qfl2 = all_one(t + l_.off[kQfl2], l_.seg[kQfl2].points());
    c.mvkd45 = all_one(t + l_.off[kMvkd45], l_.seg[kMvkd45].points());
    const Segment& s = l_.seg[kMvs5];
    const std::uint8_t* a = t + l_.off[kMvs5];
    c.mvs5 = true;
    for (std::size_t m = 0; m + 1 < s.start.size() && c.mvs5; ++m) {
      bool normal = false;
      for (std::uint32_t x = s.start[m]; x < s.start[m + 1]; ++x) normal = normal || s.weight[x] == d_;
      if (!normal) continue;
      for (std::uint32_t x = s.start[m]; x < s.start[m + 1]; ++x) c.mvs5 = c.mvs5 && a[x] == d_;
    }
    c.pairwise = std::equal(t + l_.off[kQfl2], t + l_.off[kQfl2 + 1], t + l_.off[kPext]);
  }

  Layout& l_;
  std::uint8_t d_;
  const simd::KernelTable& k_;
  std::vector<Class> classes_;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> index_;
};

using SizeLayer = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

void accumulate(std::unordered_map<std::uint32_t, std::uint64_t>& acc, std::uint32_t id, std::uint64_t mult) {
  acc[id] += mult;
}

SizeLayer finish(std::unordered_map<std::uint32_t, std::uint64_t>& acc) {
  SizeLayer out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct Decided {
  std::vector<Verdict> qfl2;
  std::vector<Verdict> mvs5;
  std::vector<Verdict> mvkd45;
};

Decided decide_all(const std::vector<Formula>& fs, const FaithfulnessOptions& opts) {
  std::vector<Formula> ss;
  std::vector<Formula> kd;
  for (const auto& f : fs) {
    ss.push_back(star_star_mvs5(f, opts.n, opts.reserved));
    kd.push_back(star_mvkd45(f));
  }
  auto ext = opts.atoms;
  ext.push_back(opts.reserved);
  Decided d;
  d.qfl2 = run_checks(fs, Variant::Qfl2, opts.atoms, opts.n, opts.decide);
  d.mvs5 = run_checks(ss, Variant::Mvs5, ext, opts.n, opts.decide);
  d.mvkd45 = run_checks(kd, Variant::Mvkd45, opts.atoms, opts.n, opts.decide);
  return d;
}

std::optional<Countermodel> first_witness(const Decided& d, std::size_t i) {
  if (d.qfl2[i].countermodel) return d.qfl2[i].countermodel;
  if (d.mvs5[i].countermodel) return d.mvs5[i].countermodel;
  return d.mvkd45[i].countermodel;
}

}  // namespace

FaithfulnessReport faithfulness_exhaustive(const FaithfulnessOptions& opts) {
  const auto atoms = normalize_atoms(opts.atoms);
  if (atoms.empty()) throw Error("faithfulness needs at least one atom");
  if (std::find(atoms.begin(), atoms.end(), opts.reserved) != atoms.end()) {
    throw Error("reserved atom '" + opts.reserved + "' is among the atoms");
  }
  const Resolution r = opts.n;
  const auto d = static_cast<std::uint8_t>(r.denominator());

  Layout l;
  l.seg[kQfl2] = possibilistic_segment(atoms, r, opts.decide.limits);
  l.seg[kMvs5] = mvs5_segment(atoms, opts.reserved, r, opts.decide.limits);
  l.seg[kMvkd45] = l.seg[kQfl2];
  l.seg[kPext] = l.seg[kQfl2];
  for (int p = 0; p < kParts; ++p) l.off[p + 1] = l.off[p] + l.seg[p].points();

  ClassBuilder cb(l, r);
  std::vector<SizeLayer> layer(static_cast<std::size_t>(std::max(opts.max_size, 1)) + 1);
  {
    std::unordered_map<std::uint32_t, std::uint64_t> acc;
    for (std::size_t a = 0; a < atoms.size(); ++a) accumulate(acc, cb.intern(cb.leaf_atom(a), Formula::atom(atoms[a])), 1);
    accumulate(acc, cb.intern(cb.constant(d), Formula::top()), 1);
    accumulate(acc, cb.intern(cb.constant(0), Formula::bot()), 1);
    layer[1] = finish(acc);
  }
  const std::vector<Op> binops{Op::Imp, Op::Min, Op::Max, Op::SConj, Op::SDisj, Op::Iff, Op::Comp};
  for (int s = 2; s <= opts.max_size; ++s) {
    std::unordered_map<std::uint32_t, std::uint64_t> acc;
    for (auto [id, mult] : layer[static_cast<std::size_t>(s - 1)]) {
      Formula rep = cb.classes()[id].rep;
      auto tn = cb.unary(Op::Neg, 0, cb.classes()[id].t);
      accumulate(acc, cb.intern(std::move(tn), Formula::neg(rep)), mult);
      for (TruthValue i : all_values(r)) {
        auto tc = cb.unary(Op::Coef, static_cast<std::uint8_t>(i.num()), cb.classes()[id].t);
        accumulate(acc, cb.intern(std::move(tc), Formula::coef(i, rep)), mult);
      }
    }
    for (int left = 1; left + 1 < s; ++left) {
      const auto& la = layer[static_cast<std::size_t>(left)];
      const auto& lb = layer[static_cast<std::size_t>(s - 1 - left)];
      for (auto [ia, ma] : la) {
        for (auto [ib, mb] : lb) {
          for (Op op : binops) {
            auto t = cb.binary(op, cb.classes()[ia].t, cb.classes()[ib].t);
            Formula f = Formula::make(op, {cb.classes()[ia].rep, cb.classes()[ib].rep});
            accumulate(acc, cb.intern(std::move(t), f), ma * mb);
          }
        }
      }
    }
    layer[static_cast<std::size_t>(s)] = finish(acc);
  }

  FaithfulnessReport rep;
  rep.formulas_by_size.assign(layer.size(), 0);
  std::vector<std::uint64_t> mult(cb.classes().size(), 0);
  for (std::size_t s = 1; s < layer.size(); ++s) {
    for (auto [id, m] : layer[s]) {
      rep.formulas_by_size[s] += m;
      mult[id] += m;
    }
    rep.formulas += rep.formulas_by_size[s];
  }

  std::vector<Formula> reps;
  for (const auto& c : cb.classes()) reps.push_back(c.rep);
  rep.classes = reps.size();
  Decided dec = decide_all(reps, opts);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Class& c = cb.classes()[i];
    if (dec.qfl2[i].is_tautology != c.qfl2 || dec.mvs5[i].is_tautology != c.mvs5 ||
        dec.mvkd45[i].is_tautology != c.mvkd45) {
      throw InternalError("value tables and the decision procedure disagree on " + print(c.rep));
    }
    if (c.qfl2) rep.tautologies += mult[i];
    bool agree = c.qfl2 == c.mvs5 && c.qfl2 == c.mvkd45;
    if (!agree || !c.pairwise) {
      rep.disagreements.push_back({c.rep, c.qfl2, c.mvs5, c.mvkd45, agree && !c.pairwise, first_witness(dec, i)});
    }
  }
  return rep;
}

FaithfulnessReport faithfulness_sample(const FaithfulnessOptions& opts) {
  const auto atoms = normalize_atoms(opts.atoms);
  const Resolution r = opts.n;
  Signature sig = qfl2_signature(atoms, r);
  std::mt19937_64 rng(opts.seed);
  std::vector<Formula> fs;
  std::unordered_set<Formula, FormulaHash> seen;
  std::size_t attempts = 0;
  while (fs.size() < static_cast<std::size_t>(opts.samples)) {
    if (++attempts > 1000u * static_cast<std::size_t>(opts.samples) + 1000u) {
      throw Error("could not draw enough distinct sample formulas");
    }
    Formula f = random_formula(sig, opts.sample_depth, rng);
    std::unordered_set<Formula, FormulaHash> comps;
    std::vector<Formula> stack{f};
    while (!stack.empty()) {
      Formula g = stack.back();
      stack.pop_back();
      if (g.op() == Op::Comp) comps.insert(g);
      for (std::size_t i = 0; i < g.arity(); ++i) stack.push_back(g.child(i));
    }
    // One or two comparisons keep the MVS5 search within desk-scale budgets.
    if (comps.empty() || comps.size() > 2) continue;
    if (seen.insert(f).second) fs.push_back(f);
  }

  FaithfulnessReport rep;
  rep.formulas = fs.size();
  rep.classes = fs.size();
  Decided dec = decide_all(fs, opts);

  // Pairwise: A on K against A* on the p-extension of K, for random models K.
  std::uniform_int_distribution<int> val(0, r.denominator());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    bool pairwise = true;
    Formula star = star_mvs5(fs[i], opts.reserved);
    for (int trial = 0; trial < 4 && pairwise; ++trial) {
      PossibilisticModel k;
      k.n = r;
      k.atoms = atoms;
      k.reserved = opts.reserved;
      int worlds = 1 + trial;
      for (int w = 0; w < worlds; ++w) {
        World wd{"w" + std::to_string(w), {}};
        for (std::size_t a = 0; a < atoms.size(); ++a) wd.val.emplace_back(r, val(rng));
        k.worlds.push_back(wd);
        k.pi.emplace_back(r, w == 0 ? r.denominator() : val(rng));
      }
      Evaluator q(k, Variant::Qfl2);
      Evaluator s(k, Variant::Mvs5);
      pairwise = q.all(fs[i]) == s.all(star);
    }
    bool a = dec.qfl2[i].is_tautology;
    bool b = dec.mvs5[i].is_tautology;
    bool c = dec.mvkd45[i].is_tautology;
    if (a) ++rep.tautologies;
    bool agree = a == b && a == c;
    if (!agree || !pairwise) rep.disagreements.push_back({fs[i], a, b, c, agree && !pairwise, first_witness(dec, i)});
  }
  return rep;
}

}  // namespace mvmodal
