#include "mvmodal/formula.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace mvmodal {

namespace detail {

struct Node {
  Op op;
  std::string name;
  std::optional<TruthValue> value;
  int count = 0;
  std::array<Formula, 2> kids;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 0;
};

}  // namespace detail

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool is_sugar(Op op) { return op >= Op::Top; }

std::size_t arity(Op op) {
  switch (op) {
    case Op::Atom:
    case Op::Top:
    case Op::Bot:
      return 0;
    case Op::Neg:
    case Op::Coef:
    case Op::Box:
    case Op::Dia:
    case Op::CoefGe:
    case Op::CoefLe:
    case Op::CoefGt:
    case Op::CoefLt:
    case Op::DiaP:
    case Op::BoxP:
    case Op::Sum:
    case Op::Prod:
      return 1;
    default:
      return 2;
  }
}

Formula Formula::make(Op op, std::vector<Formula> kids, std::string name,
                      std::optional<TruthValue> value, int count) {
  if (kids.size() != mvmodal::arity(op)) throw Error("wrong number of operands for formula node");
  for (const auto& k : kids) {
    if (k.empty()) throw Error("empty operand in formula node");
  }
  auto n = std::make_shared<detail::Node>();
  n->op = op;
  n->name = std::move(name);
  n->value = value;
  n->count = count;
  std::size_t h = std::hash<int>()(static_cast<int>(op));
  h = mix(h, std::hash<std::string>()(n->name));
  if (value) h = mix(h, static_cast<std::size_t>(value->num() * 131 + value->den()));
  h = mix(h, static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < kids.size(); ++i) {
    h = mix(h, kids[i].hash());
    n->size += kids[i].size();
    n->depth = std::max(n->depth, kids[i].depth() + 1);
    n->kids[i] = std::move(kids[i]);
  }
  n->hash = h;
  return Formula(std::move(n));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw Error("empty atom name");
  return make(Op::Atom, {}, std::move(name));
}
Formula Formula::neg(Formula a) { return make(Op::Neg, {std::move(a)}); }
Formula Formula::imp(Formula a, Formula b) { return make(Op::Imp, {std::move(a), std::move(b)}); }
Formula Formula::min(Formula a, Formula b) { return make(Op::Min, {std::move(a), std::move(b)}); }
Formula Formula::max(Formula a, Formula b) { return make(Op::Max, {std::move(a), std::move(b)}); }
Formula Formula::sconj(Formula a, Formula b) { return make(Op::SConj, {std::move(a), std::move(b)}); }
Formula Formula::sdisj(Formula a, Formula b) { return make(Op::SDisj, {std::move(a), std::move(b)}); }
Formula Formula::iff(Formula a, Formula b) { return make(Op::Iff, {std::move(a), std::move(b)}); }
Formula Formula::coef(TruthValue i, Formula a) { return make(Op::Coef, {std::move(a)}, {}, i); }
Formula Formula::box(Formula a) { return make(Op::Box, {std::move(a)}); }
Formula Formula::dia(Formula a) { return make(Op::Dia, {std::move(a)}); }
Formula Formula::comp(Formula a, Formula b) { return make(Op::Comp, {std::move(a), std::move(b)}); }
Formula Formula::top() { return make(Op::Top, {}); }
Formula Formula::bot() { return make(Op::Bot, {}); }

Formula Formula::coef_rel(Op op, TruthValue i, Formula a) {
  if (op != Op::CoefGe && op != Op::CoefLe && op != Op::CoefGt && op != Op::CoefLt) {
    throw Error("coef_rel expects a relational coefficient");
  }
  return make(op, {std::move(a)}, {}, i);
}

Formula Formula::dia_p(Formula a, std::string reserved) {
  return make(Op::DiaP, {std::move(a)}, std::move(reserved));
}
Formula Formula::box_p(Formula a, std::string reserved) {
  return make(Op::BoxP, {std::move(a)}, std::move(reserved));
}
Formula Formula::comp_p(Formula a, Formula b, std::string reserved) {
  return make(Op::CompP, {std::move(a), std::move(b)}, std::move(reserved));
}
Formula Formula::ncomp(Formula a, Formula b, std::string reserved) {
  return make(Op::NComp, {std::move(a), std::move(b)}, std::move(reserved));
}
Formula Formula::dienes(Formula a, Formula b) { return make(Op::Dienes, {std::move(a), std::move(b)}); }
Formula Formula::goedel(Formula a, Formula b, Resolution r) {
  return make(Op::Goedel, {std::move(a), std::move(b)}, {}, TruthValue::one(r));
}
Formula Formula::sum(int k, Formula a) {
  if (k < 1) throw Error("sum needs k >= 1");
  return make(Op::Sum, {std::move(a)}, {}, std::nullopt, k);
}
Formula Formula::prod(int k, Formula a) {
  if (k < 1) throw Error("prod needs k >= 1");
  return make(Op::Prod, {std::move(a)}, {}, std::nullopt, k);
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
TruthValue Formula::value() const {
  if (!node_->value) throw Error("formula node carries no truth value");
  return *node_->value;
}
int Formula::count() const { return node_->count; }
std::size_t Formula::arity() const { return mvmodal::arity(node_->op); }
const Formula& Formula::child(std::size_t i) const { return node_->kids.at(i); }
std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::depth() const { return node_->depth; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.op != y.op || x.size != y.size || x.count != y.count) return false;
  if (x.name != y.name || x.value != y.value) return false;
  for (std::size_t i = 0; i < arity(x.op); ++i) {
    if (!(x.kids[i] == y.kids[i])) return false;
  }
  return true;
}

// ---- queries --------------------------------------------------------------

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::Atom:
      if (f.name() != kTruePlaceholder) out.insert(f.name());
      return;
    case Op::DiaP:
    case Op::BoxP:
    case Op::CompP:
    case Op::NComp:
      out.insert(f.name());
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(f.child(i), out);
}

}  // namespace

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

bool contains_op(const Formula& f, Op op) {
  if (f.op() == op) return true;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (contains_op(f.child(i), op)) return true;
  }
  return false;
}

namespace {

bool has_box_dia(const Formula& f) {
  switch (f.op()) {
    case Op::Box:
    case Op::Dia:
    case Op::DiaP:
    case Op::BoxP:
    case Op::CompP:
    case Op::NComp:
      return true;
    default:
      break;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (has_box_dia(f.child(i))) return true;
  }
  return false;
}

}  // namespace

bool is_modal_free(const Formula& f) { return !has_box_dia(f) && !contains_op(f, Op::Comp); }

Formula substitute(const Formula& f, const std::map<std::string, Formula>& subst) {
  if (f.op() == Op::Atom) {
    auto it = subst.find(f.name());
    return it == subst.end() ? f : it->second;
  }
  if (f.arity() == 0) return f;
  std::vector<Formula> kids;
  bool changed = false;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    kids.push_back(substitute(f.child(i), subst));
    changed = changed || kids.back().id() != f.child(i).id();
  }
  if (!changed) return f;
  std::optional<TruthValue> value;
  if (f.op() == Op::Coef || f.op() == Op::CoefGe || f.op() == Op::CoefLe || f.op() == Op::CoefGt ||
      f.op() == Op::CoefLt || f.op() == Op::Goedel) {
    value = f.value();
  }
  return Formula::make(f.op(), std::move(kids), f.name(), value, f.count());
}

// ---- classification -------------------------------------------------------

std::string_view class_name(FormulaClass c) {
  switch (c) {
    case FormulaClass::Form0:
      return "Form0";
    case FormulaClass::B0:
      return "B0";
    case FormulaClass::BFormula:
      return "BFormula";
    case FormulaClass::Mec:
      return "Mec";
    case FormulaClass::QFL2:
      return "QFL2";
    case FormulaClass::Modal:
      return "Modal";
    case FormulaClass::Mixed:
      return "Mixed";
  }
  return "?";
}

namespace {

bool is_connective(Op op) {
  switch (op) {
    case Op::Neg:
    case Op::Imp:
    case Op::Min:
    case Op::Max:
    case Op::SConj:
    case Op::SDisj:
    case Op::Iff:
      return true;
    default:
      return false;
  }
}

bool atoms_under_coef(const Formula& f, bool under) {
  switch (f.op()) {
    case Op::Atom:
      return under || f.name() == kTruePlaceholder;
    case Op::Box:
    case Op::Dia:
    case Op::Comp:
      return false;
    case Op::Coef:
      return atoms_under_coef(f.child(0), true);
    default:
      break;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!atoms_under_coef(f.child(i), under)) return false;
  }
  return true;
}

bool coef_generated(const Formula& f) {
  if (f.op() == Op::Coef) return true;
  if (f.op() == Op::Atom) return f.name() == kTruePlaceholder;
  if (!is_connective(f.op())) return false;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!coef_generated(f.child(i))) return false;
  }
  return true;
}

void flatten_min(const Formula& f, std::vector<Formula>& out) {
  if (f.op() == Op::Min) {
    flatten_min(f.lhs(), out);
    flatten_min(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

bool is_mec_over(const Formula& f, const std::vector<std::string>& atoms) {
  std::vector<Formula> parts;
  flatten_min(f, parts);
  std::vector<std::string> seen;
  for (const auto& p : parts) {
    if (p.op() != Op::Coef || p.child(0).op() != Op::Atom) return false;
    seen.push_back(p.child(0).name());
  }
  auto sorted_seen = seen;
  std::sort(sorted_seen.begin(), sorted_seen.end());
  if (std::adjacent_find(sorted_seen.begin(), sorted_seen.end()) != sorted_seen.end()) return false;
  return sorted_seen == normalize_atoms(atoms);
}

}  // namespace

bool is_b0(const Formula& f) { return atoms_under_coef(desugar(f), false); }

bool is_b_formula(const Formula& f) { return coef_generated(desugar(f)); }

std::set<FormulaClass> classify(const Formula& f, const std::vector<std::string>* atoms) {
  std::set<FormulaClass> out;
  bool modal = has_box_dia(f);
  bool comp = contains_op(f, Op::Comp);
  if (!modal && !comp) out.insert(FormulaClass::Form0);
  if (!modal && comp) out.insert(FormulaClass::QFL2);
  if (modal && !comp) out.insert(FormulaClass::Modal);
  if (modal && comp) out.insert(FormulaClass::Mixed);
  Formula core = desugar(f);
  if (atoms_under_coef(core, false)) out.insert(FormulaClass::B0);
  if (coef_generated(core)) out.insert(FormulaClass::BFormula);
  if (atoms != nullptr && is_mec_over(core, *atoms)) out.insert(FormulaClass::Mec);
  return out;
}

// ---- mecs -----------------------------------------------------------------

Formula Mec::formula() const {
  if (atoms.empty() || atoms.size() != values.size()) throw Error("malformed maximal elementary conjunction");
  Formula f = Formula::coef(values[0], Formula::atom(atoms[0]));
  for (std::size_t k = 1; k < atoms.size(); ++k) {
    f = Formula::min(f, Formula::coef(values[k], Formula::atom(atoms[k])));
  }
  return f;
}

std::string Mec::str() const { return print(formula()); }

std::vector<std::string> normalize_atoms(std::vector<std::string> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

std::vector<Mec> mec_enumerate(const std::vector<std::string>& atoms, Resolution r) {
  auto sorted = normalize_atoms(atoms);
  if (sorted.empty()) throw Error("mec_enumerate needs at least one atom");
  std::vector<Mec> out;
  std::vector<int> digits(sorted.size(), 0);
  while (true) {
    Mec m{sorted, {}};
    for (int d : digits) m.values.emplace_back(r, d);
    out.push_back(std::move(m));
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < r.n()) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

// ---- printing -------------------------------------------------------------

namespace {

int level(Op op) {
  switch (op) {
    case Op::Comp:
    case Op::CompP:
    case Op::NComp:
      return 0;
    case Op::Iff:
      return 1;
    case Op::Imp:
      return 2;
    case Op::Max:
    case Op::SDisj:
      return 3;
    case Op::Min:
    case Op::SConj:
      return 4;
    default:
      return 5;
  }
}

void print_into(const Formula& f, int min_level, std::string& out);

void binary(const Formula& f, std::string_view sym, int left, int right, std::string& out) {
  print_into(f.lhs(), left, out);
  out += ' ';
  out += sym;
  out += ' ';
  print_into(f.rhs(), right, out);
}

void print_into(const Formula& f, int min_level, std::string& out) {
  bool paren = level(f.op()) < min_level;
  if (paren) out += '(';
  switch (f.op()) {
    case Op::Atom:
      out += f.name();
      break;
    case Op::Top:
      out += "top";
      break;
    case Op::Bot:
      out += "bot";
      break;
    case Op::Neg:
      out += '!';
      print_into(f.child(0), 5, out);
      break;
    case Op::Coef:
    case Op::CoefGe:
    case Op::CoefLe:
    case Op::CoefGt:
    case Op::CoefLt: {
      out += '[';
      if (f.op() == Op::CoefGe) out += ">=";
      if (f.op() == Op::CoefLe) out += "<=";
      if (f.op() == Op::CoefGt) out += ">";
      if (f.op() == Op::CoefLt) out += "<";
      out += f.value().fraction();
      out += ']';
      print_into(f.child(0), 5, out);
      break;
    }
    case Op::Box:
      out += "box ";
      print_into(f.child(0), 5, out);
      break;
    case Op::Dia:
      out += "dia ";
      print_into(f.child(0), 5, out);
      break;
    case Op::BoxP:
      out += "box_p ";
      print_into(f.child(0), 5, out);
      break;
    case Op::DiaP:
      out += "dia_p ";
      print_into(f.child(0), 5, out);
      break;
    case Op::Imp:
      binary(f, "->", 3, 2, out);
      break;
    case Op::Iff:
      binary(f, "<->", 1, 2, out);
      break;
    case Op::Max:
      binary(f, "\\/", 3, 4, out);
      break;
    case Op::SDisj:
      binary(f, "|+|", 3, 4, out);
      break;
    case Op::Min:
      binary(f, "/\\", 4, 5, out);
      break;
    case Op::SConj:
      binary(f, "&", 4, 5, out);
      break;
    case Op::Comp:
      binary(f, "<|", 1, 1, out);
      break;
    case Op::CompP:
      binary(f, "<|p", 1, 1, out);
      break;
    case Op::NComp:
      binary(f, "<|n", 1, 1, out);
      break;
    case Op::Dienes:
    case Op::Goedel:
      out += f.op() == Op::Dienes ? "dienes(" : "goedel(";
      print_into(f.lhs(), 0, out);
      out += ", ";
      print_into(f.rhs(), 0, out);
      out += ')';
      break;
    case Op::Sum:
    case Op::Prod:
      out += f.op() == Op::Sum ? "sum(" : "prod(";
      out += std::to_string(f.count());
      out += ", ";
      print_into(f.child(0), 0, out);
      out += ')';
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string print(const Formula& f) {
  if (f.empty()) return "<empty>";
  std::string out;
  print_into(f, 0, out);
  return out;
}

}  // namespace mvmodal
