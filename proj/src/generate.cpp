#include "mvmodal/generate.hpp"

namespace mvmodal {
namespace {

std::vector<Formula> atom_leaves(const std::vector<std::string>& atoms) {
  std::vector<Formula> out;
  for (const auto& a : normalize_atoms(atoms)) out.push_back(Formula::atom(a));
  return out;
}

void apply_unary(const Signature& sig, const Formula& a, std::vector<Formula>& out) {
  for (Op op : sig.unary) {
    if (op == Op::Coef) {
      for (TruthValue i : sig.coefs) out.push_back(Formula::coef(i, a));
    } else {
      out.push_back(Formula::make(op, {a}));
    }
  }
}

}  // namespace

Signature form0_signature(const std::vector<std::string>& atoms, Resolution r) {
  Signature s;
  s.leaves = atom_leaves(atoms);
  s.unary = {Op::Neg, Op::Coef};
  s.coefs = all_values(r);
  s.binary = {Op::Imp, Op::Min, Op::Max, Op::SConj, Op::SDisj, Op::Iff};
  return s;
}

Signature modal_signature(const std::vector<std::string>& atoms, Resolution r) {
  Signature s = form0_signature(atoms, r);
  s.unary.push_back(Op::Box);
  s.unary.push_back(Op::Dia);
  return s;
}

Signature qfl2_signature(const std::vector<std::string>& atoms, Resolution r) {
  Signature s = form0_signature(atoms, r);
  s.leaves.push_back(Formula::top());
  s.leaves.push_back(Formula::bot());
  s.binary.push_back(Op::Comp);
  return s;
}

std::vector<Formula> formulas_up_to_depth(const Signature& sig, int depth) {
  std::vector<Formula> all = sig.leaves;
  std::size_t prev_end = 0;
  for (int d = 1; d <= depth; ++d) {
    std::size_t end = all.size();
    std::vector<Formula> fresh;
    for (std::size_t i = prev_end; i < end; ++i) apply_unary(sig, all[i], fresh);
    for (Op op : sig.binary) {
      for (std::size_t i = 0; i < end; ++i) {
        for (std::size_t j = 0; j < end; ++j) {
          if (i < prev_end && j < prev_end) continue;
          fresh.push_back(Formula::make(op, {all[i], all[j]}));
        }
      }
    }
    all.insert(all.end(), fresh.begin(), fresh.end());
    prev_end = end;
  }
  return all;
}

std::vector<std::vector<Formula>> formulas_by_size(const Signature& sig, int max_size) {
  std::vector<std::vector<Formula>> by(static_cast<std::size_t>(std::max(max_size, 0)) + 1);
  if (max_size < 1) return by;
  by[1] = sig.leaves;
  for (int s = 2; s <= max_size; ++s) {
    for (const auto& a : by[s - 1]) apply_unary(sig, a, by[s]);
    for (Op op : sig.binary) {
      for (int l = 1; l + 1 < s; ++l) {
        for (const auto& a : by[l]) {
          for (const auto& b : by[s - 1 - l]) by[s].push_back(Formula::make(op, {a, b}));
        }
      }
    }
  }
  return by;
}

Formula random_formula(const Signature& sig, int max_depth, std::mt19937_64& rng) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  bool leaf = max_depth <= 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0 ||
              (sig.unary.empty() && sig.binary.empty());
  if (leaf) return sig.leaves[pick(sig.leaves.size())];
  std::size_t choices = sig.unary.size() + sig.binary.size();
  std::size_t c = pick(choices);
  if (c < sig.unary.size()) {
    Op op = sig.unary[c];
    Formula a = random_formula(sig, max_depth - 1, rng);
    if (op == Op::Coef) return Formula::coef(sig.coefs[pick(sig.coefs.size())], a);
    return Formula::make(op, {a});
  }
  Op op = sig.binary[c - sig.unary.size()];
  Formula a = random_formula(sig, max_depth - 1, rng);
  Formula b = random_formula(sig, max_depth - 1, rng);
  return Formula::make(op, {a, b});
}

}  // namespace mvmodal
