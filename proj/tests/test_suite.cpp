#include <gtest/gtest.h>

#include "mvmodal/decide.hpp"
#include "mvmodal/proofs.hpp"
#include "mvmodal/semantics.hpp"
#include "mvmodal/suite.hpp"

using namespace mvmodal;

namespace {

const SchemaResult& result(const SuiteReport& r, const std::string& id) {
  for (const auto& s : r.schemas) {
    if (s.id == id) return s;
  }
  throw std::runtime_error("no schema " + id);
}

}  // namespace

TEST(Suite, LnDepthOne) {
  SuiteOptions o;
  o.system = System::Ln;
  o.depth = 1;
  auto r = axiom_suite(o);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.instances, 0u);
  EXPECT_EQ(r.variant, Variant::Mvs5);
}

TEST(Suite, Mvs5DepthOneTwoAtoms) {
  SuiteOptions o;
  o.atoms = {"q", "r"};
  o.depth = 1;
  auto r = axiom_suite(o);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(result(r, "FIT").instances, 0u);
  EXPECT_GT(result(r, "LEM4_9").instances, 0u);
}

TEST(Suite, Mvkd45DepthTwoOneAtom) {
  SuiteOptions o;
  o.system = System::Mvkd45;
  auto r = axiom_suite(o);
  EXPECT_TRUE(r.ok());
  for (const char* id : {"MEC1", "MEC2", "MEC2_GE", "LEM5_3", "LEM5_4", "BOX_GE", "JBOX", "JDIA", "D"}) {
    EXPECT_GT(result(r, id).instances, 0u) << id;
    EXPECT_EQ(result(r, id).failures, 0u) << id;
  }
}

TEST(Suite, Qfl2Formulas) {
  for (int n : {2, 3}) {
    SuiteOptions o;
    o.system = System::Qfl2;
    o.n = Resolution(n);
    o.depth = 1;
    auto r = axiom_suite(o);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.schemas.size(), 4u);
  }
}

TEST(Suite, DivisibilityFailsAtSix) {
  SuiteOptions o;
  o.system = System::Ln;
  o.n = Resolution(6);
  o.depth = 0;
  o.only = {"DIV"};
  auto r = axiom_suite(o);
  EXPECT_FALSE(r.ok());
  const auto& div = result(r, "DIV");
  EXPECT_GT(div.failures, 0u);
  ASSERT_TRUE(div.first_failure);
  ASSERT_TRUE(div.witness);
  const auto& m = std::get<Mvs5Model>(div.witness->model);
  EXPECT_EQ(eval(*div.first_failure, m, div.witness->world), div.witness->value);
}

TEST(Suite, Lemma49HoldsUnderMvs5Only) {
  SuiteOptions o;
  o.depth = 1;
  o.only = {"LEM4_9"};
  EXPECT_TRUE(axiom_suite(o).ok());
  const Resolution r(3);
  const Formula c = parse("q", r);
  bool some_failure = false;
  for (int i = 0; i <= 2; ++i) {
    Formula f = instantiate(find_schema(System::Mvs5, "LEM4_9"), {{"C", c}}, {{"i", i}}, {r, {"q"}});
    EXPECT_TRUE(is_one_tautology(f, Variant::Mvs5, {"q"}, r).is_tautology);
    some_failure |= !is_one_tautology(f, Variant::Mvkd45, {"q"}, r).is_tautology;
  }
  EXPECT_TRUE(some_failure);
}

TEST(Suite, OnlyAndLemmaFilters) {
  SuiteOptions o;
  o.depth = 1;
  o.only = {"T", "K"};
  auto r = axiom_suite(o);
  ASSERT_EQ(r.schemas.size(), 2u);
  o.only.clear();
  o.lemmas = false;
  for (const auto& s : axiom_suite(o).schemas) EXPECT_TRUE(s.axiom) << s.id;
}

TEST(Suite, DedupDoesNotChangeVerdicts) {
  SuiteOptions o;
  o.system = System::Mvkd45;
  o.depth = 1;
  auto a = axiom_suite(o);
  o.dedup = false;
  auto b = axiom_suite(o);
  EXPECT_LE(a.pool, b.pool);
  EXPECT_EQ(a.failures, b.failures);
}
