#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mvmodal/classical.hpp"
#include "mvmodal/decide.hpp"
#include "mvmodal/generate.hpp"
#include "mvmodal/io.hpp"
#include "mvmodal/measures.hpp"
#include "mvmodal/proofs.hpp"
#include "mvmodal/semantics.hpp"
#include "mvmodal/suite.hpp"
#include "mvmodal/translate.hpp"

using namespace mvmodal;

namespace {

enum Exit { kOk = 0, kFound = 1, kUsage = 2, kCap = 3 };

struct Common {
  int n = 3;
  unsigned jobs = 1;
  std::uint64_t cap = 1'000'000;
  std::string format = "text";
  std::string reserved = "p@";

  bool json() const { return format == "json"; }
  Resolution res() const { return Resolution(n); }
  ParseOptions popts() const { return ParseOptions{reserved}; }
  DecideOptions decide() const {
    DecideOptions d;
    d.jobs = jobs;
    d.limits.max_models = cap;
    d.limits.max_world_types = 4096;
    d.reserved = reserved;
    return d;
  }
};

void add_common(CLI::App* app, Common& c, bool with_n = true) {
  if (with_n) app->add_option("--n", c.n, "number of truth values")->check(CLI::Range(2, Resolution::kMax));
  app->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--cap", c.cap, "largest number of canonical models to enumerate");
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--reserved", c.reserved, "name of the reserved atom p");
}

std::vector<std::string> split_atoms(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string describe(const Mvs5Model& m, const std::vector<TruthValue>* pi) {
  std::string out;
  for (std::size_t w = 0; w < m.worlds.size(); ++w) {
    out += "  " + m.worlds[w].id + ":";
    for (std::size_t a = 0; a < m.atoms.size(); ++a) out += " " + m.atoms[a] + "=" + m.worlds[w].val[a].str();
    if (pi != nullptr) out += " pi=" + (*pi)[w].str();
    out += "\n";
  }
  return out;
}

std::string describe(const Countermodel& c) {
  std::string out = "countermodel (value " + c.value.str() + " at " + c.world + "):\n";
  if (const auto* p = std::get_if<PossibilisticModel>(&c.model)) {
    out += describe(*p, &p->pi);
  } else {
    out += describe(std::get<Mvs5Model>(c.model), nullptr);
  }
  return out;
}

int report_verdict(const Common& c, const Verdict& v) {
  if (c.json()) {
    std::cout << to_json(v).dump(2) << "\n";
  } else if (v.is_tautology) {
    std::cout << "1-tautology (" << v.models_checked << " canonical models)\n";
  } else {
    std::cout << "not a 1-tautology\n" << describe(*v.countermodel);
  }
  return v.is_tautology ? kOk : kFound;
}

int print_suite(const Common& c, const SuiteReport& r) {
  if (c.json()) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "system " << system_name(r.system) << " under " << variant_name(r.variant) << ", n=" << r.n.n()
              << ", depth " << r.depth << ", pool " << r.pool << "\n";
    for (const auto& s : r.schemas) {
      std::cout << "  " << s.id << (s.axiom ? "" : " (lemma)") << ": " << s.instances << " instances, "
                << s.failures << " failures\n";
      if (s.first_failure) {
        std::cout << "    first failure: " << print(*s.first_failure) << "\n" << describe(*s.witness);
      }
    }
    std::cout << r.instances << " instances, " << r.failures << " failures\n";
  }
  return r.ok() ? kOk : kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Many-valued modal logic workbench"};
  app.require_subcommand(1);
  Common c;

  std::string model_file, formula_text, world, variant = "mvs5", atoms_text = "q";
  auto* eval_cmd = app.add_subcommand("eval", "value of a formula at a world of a model file");
  eval_cmd->add_option("--model", model_file)->required();
  eval_cmd->add_option("--formula", formula_text)->required();
  eval_cmd->add_option("--world", world)->required();
  eval_cmd->add_option("--variant", variant)->check(CLI::IsMember({"mvs5", "mvkd45", "altbox", "qfl2"}));
  add_common(eval_cmd, c, false);

  auto* taut_cmd = app.add_subcommand("taut", "decide 1-tautology by canonical model enumeration");
  auto* cm_cmd = app.add_subcommand("countermodel", "print the first countermodel, if any");
  for (auto* sc : {taut_cmd, cm_cmd}) {
    sc->add_option("--formula", formula_text)->required();
    sc->add_option("--variant", variant)->check(CLI::IsMember({"mvs5", "mvkd45", "altbox", "qfl2"}));
    sc->add_option("--atoms", atoms_text, "comma-separated atoms (default: those of the formula)");
    add_common(sc, c);
  }

  std::string target = "mvs5";
  bool double_star = false;
  auto* tr_cmd = app.add_subcommand("translate", "translate a QFL2 formula");
  tr_cmd->add_option("--target", target)->check(CLI::IsMember({"mvs5", "mvkd45"}));
  tr_cmd->add_option("--formula", formula_text)->required();
  tr_cmd->add_flag("--double-star", double_star, "MVS5 only: prefix (1)dia p ->");
  add_common(tr_cmd, c);

  FaithfulnessOptions fo;
  int samples = 0;
  auto* fa_cmd = app.add_subcommand("faithfulness", "compare QFL2, A** and A* tautology status");
  fa_cmd->add_option("--atoms", atoms_text);
  fa_cmd->add_option("--max-size", fo.max_size);
  fa_cmd->add_option("--samples", samples, "random formulas instead of the exhaustive sweep");
  fa_cmd->add_option("--depth", fo.sample_depth, "depth of sampled formulas");
  fa_cmd->add_option("--seed", fo.seed);
  add_common(fa_cmd, c);

  std::string assignment_file;
  int family_depth = 2;
  auto* me_cmd = app.add_subcommand("measure", "possibility measures");
  me_cmd->require_subcommand(1);
  auto* me_check = me_cmd->add_subcommand("check", "check Pi1-Pi4 on Form0 formulas of bounded depth");
  me_check->add_option("--assignment", assignment_file)->required();
  me_check->add_option("--depth", family_depth);
  auto* me_recon = me_cmd->add_subcommand("reconstruct", "model realizing an assignment");
  me_recon->add_option("--assignment", assignment_file)->required();
  auto* me_from = me_cmd->add_subcommand("from-model", "assignment induced by a possibilistic model");
  me_from->add_option("--model", model_file)->required();
  for (auto* sc : {me_check, me_recon, me_from}) add_common(sc, c, false);

  std::vector<std::string> proof_files;
  auto* pr_cmd = app.add_subcommand("proof", "Hilbert proofs");
  pr_cmd->require_subcommand(1);
  auto* pr_check = pr_cmd->add_subcommand("check", "check proof files");
  auto* pr_spot = pr_cmd->add_subcommand("spotcheck", "decide every line of premise-free proofs");
  for (auto* sc : {pr_check, pr_spot}) {
    sc->add_option("files", proof_files)->required();
    add_common(sc, c, false);
  }

  std::string system = "mvs5";
  int depth = 2;
  std::vector<std::string> only;
  bool no_lemmas = false;
  auto* ax_cmd = app.add_subcommand("axioms", "decide every instance of a system's schemas");
  ax_cmd->add_option("--system", system)->check(CLI::IsMember({"ln", "mvs5", "mvkd45", "qfl2"}));
  ax_cmd->add_option("--depth", depth);
  ax_cmd->add_option("--atoms", atoms_text);
  ax_cmd->add_option("--only", only, "schema ids");
  ax_cmd->add_flag("--no-lemmas", no_lemmas);
  add_common(ax_cmd, c);

  auto* dg_cmd = app.add_subcommand("degenerate-n2", "compare n = 2 verdicts with classical S5/KD45");
  dg_cmd->add_option("--atoms", atoms_text);
  dg_cmd->add_option("--depth", depth);
  add_common(dg_cmd, c, false);

  auto* ak_cmd = app.add_subcommand("altbox-k", "search a K countermodel under the alternative box");
  add_common(ak_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Resolution r = c.res();
    if (*eval_cmd) {
      AnyModel m = model_from_json(read_json_file(model_file));
      Resolution mr = std::visit([](const auto& x) { return x.n; }, m);
      Formula f = parse(formula_text, mr, c.popts());
      Variant v = parse_variant(variant);
      TruthValue val = std::visit([&](const auto& x) { return eval(f, x, world, v); }, m);
      if (c.json()) {
        std::cout << Json{{"value", val.str()}}.dump(2) << "\n";
      } else {
        std::cout << val.str() << "\n";
      }
      return kOk;
    }
    if (*taut_cmd || *cm_cmd) {
      Formula f = parse(formula_text, r, c.popts());
      std::vector<std::string> atoms = split_atoms(atoms_text);
      if (atoms_text == "q" && taut_cmd->count("--atoms") + cm_cmd->count("--atoms") == 0) {
        auto set = atoms_of(f);
        atoms.assign(set.begin(), set.end());
        if (atoms.empty()) atoms = {"q"};
      }
      Verdict v = is_one_tautology(f, parse_variant(variant), atoms, r, c.decide());
      if (*cm_cmd && !c.json()) {
        if (v.is_tautology) {
          std::cout << "no countermodel (" << v.models_checked << " canonical models)\n";
        } else {
          std::cout << to_json(*v.countermodel).dump(2) << "\n";
        }
        return v.is_tautology ? kOk : kFound;
      }
      return report_verdict(c, v);
    }
    if (*tr_cmd) {
      Formula f = parse(formula_text, r, c.popts());
      Formula out = target == "mvkd45" ? star_mvkd45(f)
                    : double_star      ? star_star_mvs5(f, r, c.reserved)
                                       : star_mvs5(f, c.reserved);
      if (c.json()) {
        std::cout << Json{{"formula", print(out)}}.dump(2) << "\n";
      } else {
        std::cout << print(out) << "\n";
      }
      return kOk;
    }
    if (*fa_cmd) {
      fo.atoms = split_atoms(atoms_text);
      fo.n = r;
      fo.reserved = c.reserved;
      fo.decide = c.decide();
      fo.samples = samples;
      FaithfulnessReport rep = samples > 0 ? faithfulness_sample(fo) : faithfulness_exhaustive(fo);
      if (c.json()) {
        std::cout << to_json(rep).dump(2) << "\n";
      } else {
        std::cout << rep.formulas << " formulas, " << rep.classes << " classes, " << rep.tautologies
                  << " tautologies, " << rep.disagreements.size() << " disagreements\n";
        for (const auto& d : rep.disagreements) {
          std::cout << "  " << print(d.formula) << ": qfl2=" << d.qfl2 << " mvs5=" << d.mvs5
                    << " mvkd45=" << d.mvkd45 << (d.pairwise ? " (pairwise)" : "") << "\n";
        }
      }
      return rep.disagreements.empty() ? kOk : kFound;
    }
    if (*me_check) {
      PossibilityAssignment a = assignment_from_json(read_json_file(assignment_file));
      std::vector<Formula> family = formulas_up_to_depth(form0_signature(a.atoms, a.n), family_depth);
      MeasureReport rep = check_measure(a, family);
      if (c.json()) {
        std::cout << to_json(rep).dump(2) << "\n";
      } else {
        std::cout << (rep.ok ? "ok" : "violations") << " (" << rep.checks << " checks)\n";
        for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
      }
      return rep.ok ? kOk : kFound;
    }
    if (*me_recon) {
      PossibilityAssignment a = assignment_from_json(read_json_file(assignment_file));
      std::cout << to_json(reconstruct_model(a)).dump(2) << "\n";
      return kOk;
    }
    if (*me_from) {
      AnyModel m = model_from_json(read_json_file(model_file));
      const auto* pm = std::get_if<PossibilisticModel>(&m);
      if (pm == nullptr) throw ModelError("from-model needs a possibilistic model (worlds with pi)");
      std::cout << to_json(measure_from_model(*pm)).dump(2) << "\n";
      return kOk;
    }
    if (*pr_check || *pr_spot) {
      int code = kOk;
      Json all = Json::array();
      for (const auto& file : proof_files) {
        Proof p = proof_from_json(read_json_file(file), c.popts());
        if (*pr_check) {
          ProofCheck pc = check_proof(p);
          if (!pc.ok) code = kFound;
          if (c.json()) {
            Json j = to_json(pc);
            j["file"] = file;
            all.push_back(j);
          } else if (pc.ok) {
            std::cout << file << ": ok\n";
          } else {
            std::cout << file << ": line " << pc.line << ": " << pc.reason << "\n";
          }
        } else {
          SpotcheckReport rep = soundness_spotcheck(p, c.decide());
          if (!rep.ok) code = kFound;
          if (rep.partial && code == kOk) code = kCap;
          if (c.json()) {
            Json j = to_json(rep);
            j["file"] = file;
            all.push_back(j);
          } else {
            std::cout << file << ": " << (rep.ok ? "all lines are 1-tautologies" : "unsound line found")
                      << (rep.partial ? " (partial)" : "") << "\n";
            for (const auto& l : rep.lines) {
              if (!l.tautology) {
                std::cout << "  line " << l.line << (l.skipped ? ": skipped (cap)\n" : ": not a 1-tautology\n");
              }
            }
          }
        }
      }
      if (c.json()) std::cout << all.dump(2) << "\n";
      return code;
    }
    if (*ax_cmd) {
      SuiteOptions so;
      so.system = parse_system(system);
      so.n = r;
      so.atoms = split_atoms(atoms_text);
      so.depth = depth;
      so.only = only;
      so.lemmas = !no_lemmas;
      so.decide = c.decide();
      return print_suite(c, axiom_suite(so));
    }
    if (*dg_cmd) {
      DegenerateReport rep = degenerate_n2(split_atoms(atoms_text), depth, c.decide());
      if (c.json()) {
        std::cout << Json{{"formulas", rep.formulas},
                          {"mvs5_mismatches", rep.mvs5_mismatches},
                          {"mvkd45_mismatches", rep.mvkd45_mismatches},
                          {"examples", rep.examples}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << rep.formulas << " modal formulas; S5 mismatches " << rep.mvs5_mismatches
                  << ", KD45 mismatches " << rep.mvkd45_mismatches << "\n";
        for (const auto& e : rep.examples) std::cout << "  " << e << "\n";
      }
      return rep.ok() ? kOk : kFound;
    }
    if (*ak_cmd) {
      Formula k = parse("box(q -> r) -> (box q -> box r)", r, c.popts());
      Verdict v = is_one_tautology(k, Variant::AltBox, {"q", "r"}, r, c.decide());
      if (!c.json()) std::cout << "K under the alternative box: " << print(k) << "\n";
      return report_verdict(c, v);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
