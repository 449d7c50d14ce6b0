#include "mvmodal/io.hpp"

#include <fstream>
#include <sstream>

namespace mvmodal {
namespace {

Resolution resolution_of(const Json& j) {
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw Error("missing integer field 'n'");
  return Resolution(j.at("n").get<int>());
}

std::vector<std::string> atoms_field(const Json& j) {
  if (!j.contains("atoms")) return {};
  return j.at("atoms").get<std::vector<std::string>>();
}

TruthValue value_of(const Json& j, Resolution r) {
  if (j.is_string()) return TruthValue::parse(j.get<std::string>(), r);
  if (j.is_number_integer()) return TruthValue(r, j.get<int>() * r.denominator());
  throw Error("truth values must be strings such as \"1/2\"");
}

Json worlds_json(const Mvs5Model& m, const std::vector<TruthValue>* pi) {
  Json worlds = Json::array();
  for (std::size_t w = 0; w < m.worlds.size(); ++w) {
    Json world;
    world["id"] = m.worlds[w].id;
    if (pi != nullptr) world["pi"] = (*pi)[w].fraction();
    Json val = Json::object();
    for (std::size_t a = 0; a < m.atoms.size(); ++a) val[m.atoms[a]] = m.worlds[w].val[a].fraction();
    world["val"] = val;
    worlds.push_back(world);
  }
  return worlds;
}

Json formula_json(const Formula& f) { return print(f); }

std::size_t line_ref(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw Error("line references must be positive integers");
  return j.get<std::size_t>();
}

Json params_json(const Schema& s, const Params& p, Resolution n) {
  Json out = Json::object();
  for (const auto& spec : s.params) {
    auto it = p.find(spec.name);
    if (it == p.end()) continue;
    switch (spec.kind) {
      case ParamKind::Value:
        out[spec.name] = TruthValue(n, it->second).fraction();
        break;
      case ParamKind::Count:
        out[spec.name] = it->second;
        break;
      case ParamKind::Connective:
        out[spec.name] = std::string(connective_symbol(connectives().at(static_cast<std::size_t>(it->second))));
        break;
    }
  }
  return out;
}

Params params_from_json(const Schema& s, const Json& j, Resolution n) {
  Params out;
  for (const auto& [key, v] : j.items()) {
    const ParamSpec* spec = nullptr;
    for (const auto& p : s.params) {
      if (p.name == key) spec = &p;
    }
    if (spec == nullptr) throw ProofError("schema " + s.id + " has no parameter " + key);
    switch (spec->kind) {
      case ParamKind::Value:
        out[key] = value_of(v, n).num();
        break;
      case ParamKind::Count:
        out[key] = v.get<int>();
        break;
      case ParamKind::Connective: {
        std::string sym = v.get<std::string>();
        bool found = false;
        for (std::size_t k = 0; k < connectives().size(); ++k) {
          if (connective_symbol(connectives()[k]) == sym) {
            out[key] = static_cast<int>(k);
            found = true;
          }
        }
        if (!found) throw ProofError("unknown connective '" + sym + "'");
        break;
      }
    }
  }
  return out;
}

}  // namespace

Json to_json(const Mvs5Model& m) {
  Json j;
  j["n"] = m.n.n();
  j["atoms"] = m.atoms;
  j["worlds"] = worlds_json(m, nullptr);
  return j;
}

Json to_json(const PossibilisticModel& m) {
  Json j;
  j["n"] = m.n.n();
  j["atoms"] = m.atoms;
  j["reserved_p"] = m.reserved;
  j["worlds"] = worlds_json(m, &m.pi);
  return j;
}

Json to_json(const AnyModel& m) {
  return std::visit([](const auto& x) { return to_json(x); }, m);
}

AnyModel model_from_json(const Json& j) {
  Resolution r = resolution_of(j);
  Mvs5Model base;
  base.n = r;
  base.atoms = atoms_field(j);
  if (!j.contains("worlds") || !j.at("worlds").is_array()) throw ModelError("missing 'worlds' array");
  std::vector<TruthValue> pi;
  std::size_t with_pi = 0;
  for (const auto& w : j.at("worlds")) {
    World world;
    world.id = w.at("id").get<std::string>();
    const Json& val = w.contains("val") ? w.at("val") : Json::object();
    for (const auto& [atom, v] : val.items()) {
      if (!base.atom_index(atom)) throw ModelError("world " + world.id + " values undeclared atom '" + atom + "'");
    }
    for (const auto& atom : base.atoms) {
      if (!val.contains(atom)) throw ModelError("world " + world.id + " gives no value to atom '" + atom + "'");
      world.val.push_back(value_of(val.at(atom), r));
    }
    if (w.contains("pi")) {
      pi.push_back(value_of(w.at("pi"), r));
      ++with_pi;
    }
    base.worlds.push_back(std::move(world));
  }
  if (with_pi == 0) {
    require_valid(base);
    return base;
  }
  if (with_pi != base.worlds.size()) throw ModelError("either every world or none must have 'pi'");
  PossibilisticModel m;
  static_cast<Mvs5Model&>(m) = std::move(base);
  m.pi = std::move(pi);
  if (j.contains("reserved_p")) m.reserved = j.at("reserved_p").get<std::string>();
  require_valid(m);
  return m;
}

Json to_json(const PossibilityAssignment& a) {
  Json j;
  j["n"] = a.n.n();
  j["atoms"] = a.atoms;
  Json table = Json::array();
  auto mecs = a.mecs();
  for (std::size_t k = 0; k < mecs.size() && k < a.table.size(); ++k) {
    Json mec = Json::object();
    for (std::size_t i = 0; i < mecs[k].atoms.size(); ++i) mec[mecs[k].atoms[i]] = mecs[k].values[i].fraction();
    table.push_back({{"mec", mec}, {"pi", a.table[k].fraction()}});
  }
  j["table"] = table;
  return j;
}

PossibilityAssignment assignment_from_json(const Json& j) {
  PossibilityAssignment a;
  a.n = resolution_of(j);
  a.atoms = normalize_atoms(atoms_field(j));
  if (a.atoms.empty()) throw ModelError("assignment declares no atoms");
  auto mecs = a.mecs();
  std::vector<std::optional<TruthValue>> slots(mecs.size());
  for (const auto& entry : j.at("table")) {
    Mec m{a.atoms, {}};
    const Json& mec = entry.at("mec");
    if (mec.size() != a.atoms.size()) throw ModelError("mec entries must value every atom exactly once");
    for (const auto& atom : a.atoms) {
      if (!mec.contains(atom)) throw ModelError("mec entry misses atom '" + atom + "'");
      m.values.push_back(value_of(mec.at(atom), a.n));
    }
    auto it = std::find(mecs.begin(), mecs.end(), m);
    auto k = static_cast<std::size_t>(it - mecs.begin());
    if (slots[k]) throw ModelError("duplicate table entry for " + m.str());
    slots[k] = value_of(entry.at("pi"), a.n);
  }
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) throw ModelError("table has no entry for " + mecs[k].str());
    a.table.push_back(*slots[k]);
  }
  return a;
}

Proof proof_from_json(const Json& j, const ParseOptions& popts) {
  Proof p;
  p.system = parse_system(j.at("system").get<std::string>());
  p.n = resolution_of(j);
  p.atoms = atoms_field(j);
  auto formula = [&](const Json& x) { return parse(x.get<std::string>(), p.n, popts); };
  if (j.contains("premises")) {
    for (const auto& f : j.at("premises")) p.premises.push_back(formula(f));
  }
  for (const auto& l : j.at("lines")) {
    ProofLine line;
    line.formula = formula(l.at("formula"));
    const Json& just = l.at("just");
    Justification& js = line.just;
    if (just.contains("premise")) {
      js.kind = Justification::Kind::Premise;
      js.premise = line_ref(just.at("premise"));
    } else if (just.contains("axiom")) {
      js.kind = Justification::Kind::Axiom;
      js.schema = just.at("axiom").get<std::string>();
      if (just.contains("subst")) {
        Subst subst;
        for (const auto& [mv, f] : just.at("subst").items()) subst.emplace(mv, formula(f));
        js.subst = std::move(subst);
      }
      if (just.contains("params")) {
        const Schema* s = nullptr;
        for (const auto& sc : catalog(p.system)) {
          if (sc.id == js.schema) s = &sc;
        }
        if (s != nullptr) js.params = params_from_json(*s, just.at("params"), p.n);
      }
    } else if (just.contains("mp")) {
      js.kind = Justification::Kind::MP;
      for (const auto& r : just.at("mp")) js.refs.push_back(line_ref(r));
    } else if (just.contains("nec")) {
      js.kind = Justification::Kind::Nec;
      js.refs.push_back(line_ref(just.at("nec")));
    } else if (just.contains("coef_one")) {
      js.kind = Justification::Kind::CoefOne;
      js.refs.push_back(line_ref(just.at("coef_one")));
    } else {
      throw ProofError("unknown justification " + just.dump());
    }
    p.lines.push_back(std::move(line));
  }
  return p;
}

Json to_json(const Proof& p) {
  Json j;
  j["system"] = std::string(system_name(p.system));
  j["n"] = p.n.n();
  if (!p.atoms.empty()) j["atoms"] = p.atoms;
  Json premises = Json::array();
  for (const auto& f : p.premises) premises.push_back(formula_json(f));
  j["premises"] = premises;
  Json lines = Json::array();
  for (const auto& l : p.lines) {
    Json just;
    const Justification& js = l.just;
    switch (js.kind) {
      case Justification::Kind::Premise:
        just["premise"] = js.premise;
        break;
      case Justification::Kind::Axiom: {
        just["axiom"] = js.schema;
        if (js.subst) {
          Json subst = Json::object();
          for (const auto& [mv, f] : *js.subst) subst[mv] = formula_json(f);
          just["subst"] = subst;
        }
        if (!js.params.empty()) just["params"] = params_json(find_schema(p.system, js.schema), js.params, p.n);
        break;
      }
      case Justification::Kind::MP:
        just["mp"] = js.refs;
        break;
      case Justification::Kind::Nec:
        just["nec"] = js.refs.at(0);
        break;
      case Justification::Kind::CoefOne:
        just["coef_one"] = js.refs.at(0);
        break;
    }
    lines.push_back({{"formula", formula_json(l.formula)}, {"just", just}});
  }
  j["lines"] = lines;
  return j;
}

Json to_json(const Countermodel& c) {
  return Json{{"model", to_json(c.model)}, {"world", c.world}, {"value", c.value.str()}};
}

Json to_json(const Verdict& v) {
  Json j;
  j["tautology"] = v.is_tautology;
  j["models_checked"] = v.models_checked;
  if (v.countermodel) j["countermodel"] = to_json(*v.countermodel);
  return j;
}

Json to_json(const ProofCheck& c) {
  Json j;
  j["ok"] = c.ok;
  if (!c.ok) {
    j["line"] = c.line;
    j["reason"] = c.reason;
  }
  return j;
}

Json to_json(const SpotcheckReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["partial"] = r.partial;
  Json lines = Json::array();
  for (const auto& l : r.lines) {
    Json x{{"line", l.line}, {"tautology", l.tautology}, {"skipped", l.skipped}};
    if (l.countermodel) x["countermodel"] = to_json(*l.countermodel);
    lines.push_back(x);
  }
  j["lines"] = lines;
  return j;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["system"] = std::string(system_name(r.system));
  j["semantics"] = std::string(variant_name(r.variant));
  j["n"] = r.n.n();
  j["atoms"] = r.atoms;
  j["depth"] = r.depth;
  j["pool"] = r.pool;
  j["instances"] = r.instances;
  j["failures"] = r.failures;
  Json schemas = Json::array();
  for (const auto& s : r.schemas) {
    Json x{{"id", s.id}, {"text", s.text}, {"axiom", s.axiom}, {"instances", s.instances}, {"failures", s.failures}};
    if (s.first_failure) x["first_failure"] = print(*s.first_failure);
    if (s.witness) x["witness"] = to_json(*s.witness);
    schemas.push_back(x);
  }
  j["schemas"] = schemas;
  return j;
}

Json to_json(const MeasureReport& r) {
  return Json{{"ok", r.ok}, {"checks", r.checks}, {"violations", r.violations}};
}

Json to_json(const FaithfulnessReport& r) {
  Json j;
  j["formulas"] = r.formulas;
  j["classes"] = r.classes;
  j["tautologies"] = r.tautologies;
  j["formulas_by_size"] = r.formulas_by_size;
  Json dis = Json::array();
  for (const auto& d : r.disagreements) {
    Json x{{"formula", print(d.formula)},
           {"qfl2", d.qfl2},
           {"mvs5", d.mvs5},
           {"mvkd45", d.mvkd45},
           {"pairwise", d.pairwise}};
    if (d.witness) x["witness"] = to_json(*d.witness);
    dis.push_back(x);
  }
  j["disagreements"] = dis;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace mvmodal
