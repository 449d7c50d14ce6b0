#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "mvmodal/io.hpp"
#include "mvmodal/proofs.hpp"

using namespace mvmodal;
namespace fs = std::filesystem;

namespace {

const Resolution R3(3);
Formula P(const char* s) { return parse(s, R3); }
SchemaContext ctx3() { return {R3, {"q"}}; }

ProofLine line(const char* f, Justification j) { return {P(f), std::move(j)}; }

Justification axiom(const char* id) {
  Justification j;
  j.kind = Justification::Kind::Axiom;
  j.schema = id;
  return j;
}

Justification rule(Justification::Kind k, std::vector<std::size_t> refs) {
  Justification j;
  j.kind = k;
  j.refs = std::move(refs);
  return j;
}

std::vector<fs::path> corpus(const char* dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(fs::path(MVMODAL_TEST_DATA) / "proofs" / dir)) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Proofs, InstantiateExamples) {
  EXPECT_EQ(instantiate(find_schema(System::Mvs5, "T"), {{"A", P("q")}}, {}, ctx3()), P("box q -> q"));
  const auto& b1 = find_schema(System::Mvs5, "B_ONE");
  EXPECT_EQ(instantiate(b1, {{"A", P("[2/2]q")}}, {}, ctx3()), P("[2/2]q <-> [2/2][2/2]q"));
  EXPECT_THROW(instantiate(b1, {{"A", P("q")}}, {}, ctx3()), ProofError);
  const auto& cc = find_schema(System::Ln, "COEF_CONN");
  Params params{{"i", 1}, {"j", 1}, {"op", 2}};
  EXPECT_EQ(connectives()[2], Op::SConj);
  EXPECT_EQ(instantiate(cc, {{"A", P("q")}, {"B", P("r")}}, params, ctx3()),
            P("([1/2]q /\\ [1/2]r) -> [0/2](q & r)"));
}

TEST(Proofs, InstantiateRejectsBadBindings) {
  const auto& t = find_schema(System::Mvs5, "T");
  EXPECT_THROW(instantiate(t, {}, {}, ctx3()), ProofError);
  EXPECT_THROW(instantiate(t, {{"A", P("q")}, {"B", P("q")}}, {}, ctx3()), ProofError);
  const auto& fit = find_schema(System::Mvs5, "FIT");
  EXPECT_THROW(instantiate(fit, {{"A", P("q")}}, {{"i", 7}}, ctx3()), ProofError);
  const auto& mec1 = find_schema(System::Mvkd45, "MEC1");
  EXPECT_THROW(instantiate(mec1, {{"A", P("q")}, {"E", P("q")}}, {{"j", 1}}, ctx3()), ProofError);
  EXPECT_THROW(find_schema(System::Mvkd45, "T"), ProofError);
}

TEST(Proofs, CoefConnMatchesConnectiveTables) {
  const auto& cc = find_schema(System::Ln, "COEF_CONN");
  for (int op = 0; op < static_cast<int>(connectives().size()); ++op) {
    for (int i = 0; i <= 2; ++i) {
      for (int j = 0; j <= 2; ++j) {
        Formula f = instantiate(cc, {{"A", P("q")}, {"B", P("r")}}, {{"i", i}, {"j", j}, {"op", op}}, ctx3());
        TruthValue t = apply_connective(connectives()[op], TruthValue(R3, i), TruthValue(R3, j));
        EXPECT_EQ(f.rhs().op(), Op::Coef);
        EXPECT_EQ(f.rhs().value(), t);
      }
    }
  }
}

TEST(Proofs, DivisibilityFamily) {
  const auto& div = find_schema(System::Ln, "DIV");
  auto admissible = [&](int n) {
    std::vector<int> ms;
    for (int m = 1; m <= n; ++m) {
      if (div.build({{"A", P("q")}}, {{"m", m}}, {Resolution(n), {"q"}})) ms.push_back(m);
    }
    return ms;
  };
  EXPECT_TRUE(admissible(3).empty());
  EXPECT_TRUE(admissible(5).empty());
  EXPECT_EQ(admissible(6), (std::vector<int>{3, 4}));
  EXPECT_EQ(admissible(7), (std::vector<int>{5}));
}

TEST(Proofs, MatchSchemaIsFirstOrder) {
  const auto& l1 = find_schema(System::Ln, "L1");
  auto m = match_schema(l1, P("(q -> r) -> (s -> (q -> r))"), ctx3());
  ASSERT_TRUE(m);
  EXPECT_EQ(m->subst.at("A"), P("q -> r"));
  EXPECT_EQ(m->subst.at("B"), P("s"));
  EXPECT_FALSE(match_schema(l1, P("q -> (r -> r)"), ctx3()));
  auto fit = match_schema(find_schema(System::Mvs5, "FIT"), P("[>=1/2]box q <-> box [>=1/2]q"), ctx3());
  ASSERT_TRUE(fit);
  EXPECT_EQ(fit->params.at("i"), 1);
}

TEST(Proofs, CheckExamples) {
  Proof ok;
  ok.system = System::Mvs5;
  ok.lines = {line("q -> (r -> q)", axiom("L1")),
              line("[2/2](q -> (r -> q))", rule(Justification::Kind::CoefOne, {1}))};
  EXPECT_TRUE(check_proof(ok).ok);

  Proof bad = ok;
  bad.lines[1].formula = P("[2/2](q -> (q -> q))");
  auto c = check_proof(bad);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.line, 2u);

  Proof nec;
  nec.system = System::Mvs5;
  nec.premises = {P("[2/2]box q")};
  Justification prem;
  prem.kind = Justification::Kind::Premise;
  prem.premise = 1;
  nec.lines = {line("[2/2]box q", prem), line("box [2/2]box q", rule(Justification::Kind::Nec, {1}))};
  auto cn = check_proof(nec);
  EXPECT_FALSE(cn.ok);
  EXPECT_EQ(cn.line, 2u);
  EXPECT_NE(cn.reason.find("necessitation"), std::string::npos);
}

TEST(Proofs, PremisesMustBeBFormulasInModalSystems) {
  Proof p;
  p.system = System::Mvs5;
  p.premises = {P("q")};
  Justification prem;
  prem.kind = Justification::Kind::Premise;
  prem.premise = 1;
  p.lines = {line("q", prem)};
  auto c = check_proof(p);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.line, 0u);
  p.system = System::Ln;
  EXPECT_TRUE(check_proof(p).ok);
}

TEST(Proofs, EmptyProofIsRejected) {
  Proof p;
  EXPECT_FALSE(check_proof(p).ok);
}

TEST(Proofs, ValidCorpusIsAccepted) {
  auto files = corpus("valid");
  EXPECT_GE(files.size(), 10u);
  for (const auto& f : files) {
    Proof p = proof_from_json(read_json_file(f.string()));
    auto c = check_proof(p);
    EXPECT_TRUE(c.ok) << f << ": line " << c.line << ": " << c.reason;
  }
}

TEST(Proofs, MutationsAreRejectedAtTheirLine) {
  auto files = corpus("invalid");
  EXPECT_GE(files.size(), 20u);
  for (const auto& f : files) {
    Json j = read_json_file(f.string());
    auto c = check_proof(proof_from_json(j));
    EXPECT_FALSE(c.ok) << f;
    EXPECT_EQ(c.line, j.at("expect_line").get<std::size_t>()) << f << ": " << c.reason;
  }
}

TEST(Proofs, SpotcheckExamples) {
  Proof ok;
  ok.system = System::Mvs5;
  ok.lines = {line("q -> (r -> q)", axiom("L1")),
              line("[2/2](q -> (r -> q))", rule(Justification::Kind::CoefOne, {1}))};
  auto rep = soundness_spotcheck(ok);
  EXPECT_TRUE(rep.ok);
  EXPECT_FALSE(rep.partial);
  ASSERT_EQ(rep.lines.size(), 2u);
  for (const auto& l : rep.lines) EXPECT_TRUE(l.tautology);

  Proof fake = ok;
  fake.lines = {line("q -> box q", axiom("T"))};
  auto bad = soundness_spotcheck(fake);
  EXPECT_FALSE(bad.ok);
  ASSERT_EQ(bad.lines.size(), 1u);
  EXPECT_TRUE(bad.lines[0].countermodel);

  Proof with_premise = ok;
  with_premise.premises = {P("[2/2]q")};
  EXPECT_THROW(soundness_spotcheck(with_premise), ProofError);
}

TEST(Proofs, AcceptedCorpusPassesSpotcheck) {
  for (const auto& f : corpus("valid")) {
    Proof p = proof_from_json(read_json_file(f.string()));
    if (!p.premises.empty()) continue;
    DecideOptions opts;
    opts.limits.max_world_types = 4096;
    auto rep = soundness_spotcheck(p, opts);
    EXPECT_TRUE(rep.ok) << f;
    EXPECT_FALSE(rep.partial) << f;
  }
}

TEST(Proofs, CatalogShape) {
  for (System s : {System::Ln, System::Mvs5, System::Mvkd45, System::Qfl2}) {
    EXPECT_EQ(parse_system(system_name(s)), s);
    EXPECT_FALSE(catalog(s).empty());
    for (const auto& sc : catalog(s)) {
      for (const auto& [mv, cond] : sc.side) {
        EXPECT_NE(std::find(sc.metavars.begin(), sc.metavars.end(), mv), sc.metavars.end()) << sc.id;
        (void)cond;
      }
    }
  }
  EXPECT_FALSE(find_schema(System::Mvs5, "LEM4_9").axiom);
  EXPECT_TRUE(find_schema(System::Mvkd45, "MEC2").axiom);
  EXPECT_THROW(parse_system("s4"), Error);
}
