#include "mvmodal/kripke.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mvmodal/formula.hpp"

namespace mvmodal {

std::optional<std::size_t> Mvs5Model::atom_index(std::string_view atom) const {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i] == atom) return i;
  }
  return std::nullopt;
}

std::size_t Mvs5Model::world_index(std::string_view id) const {
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (worlds[i].id == id) return i;
  }
  throw ModelError("unknown world '" + std::string(id) + "'");
}

std::vector<std::string> validate(const Mvs5Model& m) {
  std::vector<std::string> errs;
  if (m.worlds.empty()) errs.push_back("model has no worlds");
  std::set<std::string> seen_atoms;
  for (const auto& a : m.atoms) {
    if (a.empty()) errs.push_back("empty atom name");
    if (a == kTruePlaceholder) errs.push_back("atom name '" + a + "' is reserved");
    if (!seen_atoms.insert(a).second) errs.push_back("duplicate atom '" + a + "'");
  }
  std::set<std::string> seen_ids;
  for (const auto& w : m.worlds) {
    if (!seen_ids.insert(w.id).second) errs.push_back("duplicate world id '" + w.id + "'");
    if (w.val.size() != m.atoms.size()) {
      errs.push_back("world '" + w.id + "' values " + std::to_string(w.val.size()) + " of " +
                     std::to_string(m.atoms.size()) + " atoms");
    }
    for (const auto& v : w.val) {
      if (v.resolution() != m.n) {
        errs.push_back("world '" + w.id + "' has a value of the wrong resolution");
        break;
      }
    }
  }
  return errs;
}

std::vector<std::string> validate(const PossibilisticModel& m) {
  auto errs = validate(static_cast<const Mvs5Model&>(m));
  if (m.pi.size() != m.worlds.size()) {
    errs.push_back("pi has " + std::to_string(m.pi.size()) + " entries for " +
                   std::to_string(m.worlds.size()) + " worlds");
    return errs;
  }
  bool normalized = false;
  for (const auto& p : m.pi) {
    if (p.resolution() != m.n) {
      errs.push_back("pi value of the wrong resolution");
      return errs;
    }
    normalized = normalized || p.is_one();
  }
  if (!m.worlds.empty() && !normalized) errs.push_back("pi is not normalized: no world has possibility 1");
  if (m.atom_index(m.reserved)) errs.push_back("reserved atom '" + m.reserved + "' is a model atom");
  return errs;
}

namespace {

template <class M>
void require(const M& m) {
  auto errs = validate(m);
  if (errs.empty()) return;
  std::string msg = "invalid model:";
  for (const auto& e : errs) msg += " " + e + ";";
  throw ModelError(msg);
}

}  // namespace

void require_valid(const Mvs5Model& m) { require(m); }
void require_valid(const PossibilisticModel& m) { require(m); }

Mvs5Model p_extension(const PossibilisticModel& m, const std::string& reserved) {
  if (m.atom_index(reserved)) throw ModelError("reserved atom '" + reserved + "' clashes with a model atom");
  if (m.pi.size() != m.worlds.size()) throw ModelError("pi does not cover every world");
  Mvs5Model out;
  out.n = m.n;
  out.atoms = m.atoms;
  out.atoms.push_back(reserved);
  out.worlds = m.worlds;
  for (std::size_t w = 0; w < out.worlds.size(); ++w) out.worlds[w].val.push_back(m.pi[w]);
  return out;
}

Mvs5Model p_extension(const PossibilisticModel& m) { return p_extension(m, m.reserved); }

PossibilisticModel p_restriction(const Mvs5Model& m, const std::string& reserved) {
  auto idx = m.atom_index(reserved);
  if (!idx) throw ModelError("reserved atom '" + reserved + "' is absent");
  PossibilisticModel out;
  out.n = m.n;
  out.reserved = reserved;
  for (std::size_t a = 0; a < m.atoms.size(); ++a) {
    if (a != *idx) out.atoms.push_back(m.atoms[a]);
  }
  bool normalized = false;
  for (const auto& w : m.worlds) {
    World nw{w.id, {}};
    for (std::size_t a = 0; a < w.val.size(); ++a) {
      if (a != *idx) nw.val.push_back(w.val[a]);
    }
    out.worlds.push_back(std::move(nw));
    out.pi.push_back(w.val.at(*idx));
    normalized = normalized || w.val[*idx].is_one();
  }
  if (!normalized) throw ModelError("reserved atom '" + reserved + "' never takes value 1");
  return out;
}

namespace {

std::vector<int> val_key(const World& w) {
  std::vector<int> k;
  for (const auto& v : w.val) k.push_back(v.num());
  return k;
}

/// For each world, the index of its merged class; classes ordered by first occurrence.
std::vector<std::size_t> classes(const Mvs5Model& m, std::size_t& count) {
  std::map<std::vector<int>, std::size_t> cls;
  std::vector<std::size_t> out;
  for (const auto& w : m.worlds) {
    auto [it, fresh] = cls.emplace(val_key(w), cls.size());
    out.push_back(it->second);
  }
  count = cls.size();
  return out;
}

}  // namespace

Mvs5Model canonicalize(const Mvs5Model& m) {
  std::size_t count = 0;
  auto cls = classes(m, count);
  Mvs5Model out;
  out.n = m.n;
  out.atoms = m.atoms;
  out.worlds.resize(count);
  std::vector<bool> set(count, false);
  for (std::size_t w = 0; w < m.worlds.size(); ++w) {
    auto& dst = out.worlds[cls[w]];
    if (!set[cls[w]]) {
      dst = m.worlds[w];
      set[cls[w]] = true;
    } else if (m.worlds[w].id < dst.id) {
      dst.id = m.worlds[w].id;
    }
  }
  return out;
}

PossibilisticModel canonicalize(const PossibilisticModel& m) {
  std::size_t count = 0;
  auto cls = classes(m, count);
  PossibilisticModel out;
  static_cast<Mvs5Model&>(out) = canonicalize(static_cast<const Mvs5Model&>(m));
  out.reserved = m.reserved;
  out.pi.assign(count, TruthValue::zero(m.n));
  for (std::size_t w = 0; w < m.worlds.size(); ++w) {
    out.pi[cls[w]] = std::max(out.pi[cls[w]], m.pi.at(w));
  }
  return out;
}

}  // namespace mvmodal
