#include <gtest/gtest.h>

#include <random>

#include "mvmodal/decide.hpp"
#include "mvmodal/generate.hpp"
#include "mvmodal/semantics.hpp"

using namespace mvmodal;

namespace {

const Resolution R3(3);
TruthValue v3(int k) { return TruthValue(R3, k); }
Formula P(const char* s) { return parse(s, R3); }

TruthValue reevaluate(const Formula& f, const Countermodel& c, Variant v) {
  if (const auto* m = std::get_if<PossibilisticModel>(&c.model)) return eval(f, *m, c.world, v);
  return eval(f, std::get<Mvs5Model>(c.model), c.world, v);
}

}  // namespace

TEST(Decide, TautologyExamples) {
  for (Variant v : {Variant::Mvs5, Variant::Mvkd45, Variant::AltBox, Variant::Qfl2}) {
    EXPECT_TRUE(is_one_tautology(P("q -> q"), v, {"q"}, R3).is_tautology);
  }
  DecideOptions all;
  all.use_bound = false;
  auto d = is_one_tautology(P("box q -> dia q"), Variant::Mvkd45, {"q"}, R3, all);
  EXPECT_TRUE(d.is_tautology);
  EXPECT_EQ(d.models_checked, 37u);
}

TEST(Decide, AltBoxKFails) {
  Formula k = P("box (q -> r) -> (box q -> box r)");
  auto d = is_one_tautology(k, Variant::AltBox, {"q", "r"}, R3);
  ASSERT_FALSE(d.is_tautology);
  ASSERT_TRUE(d.countermodel);
  EXPECT_EQ(d.countermodel->value, v3(1));
  EXPECT_EQ(reevaluate(k, *d.countermodel, Variant::AltBox), v3(1));
  EXPECT_TRUE(is_one_tautology(k, Variant::Mvkd45, {"q", "r"}, R3).is_tautology);
}

TEST(Decide, CountermodelsReevaluate) {
  std::mt19937_64 rng(51);
  auto sig = modal_signature({"q"}, R3);
  int found = 0;
  for (int k = 0; k < 150; ++k) {
    Formula f = random_formula(sig, 3, rng);
    for (Variant v : {Variant::Mvs5, Variant::Mvkd45, Variant::AltBox}) {
      auto d = is_one_tautology(f, v, {"q"}, R3);
      EXPECT_EQ(d.is_tautology, !d.countermodel.has_value());
      if (d.countermodel) {
        ++found;
        EXPECT_LT(d.countermodel->value, v3(2));
        EXPECT_EQ(reevaluate(f, *d.countermodel, v), d.countermodel->value) << print(f);
      }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Decide, WitnessBoundIsExact) {
  std::mt19937_64 rng(52);
  auto sig = modal_signature({"q"}, R3);
  DecideOptions full;
  full.use_bound = false;
  std::vector<Formula> fs;
  for (int k = 0; k < 200; ++k) fs.push_back(random_formula(sig, 3, rng));
  for (Variant v : {Variant::Mvs5, Variant::Mvkd45, Variant::AltBox}) {
    auto bounded = run_checks(fs, v, {"q"}, R3);
    auto exhaustive = run_checks(fs, v, {"q"}, R3, full);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      EXPECT_EQ(bounded[k].is_tautology, exhaustive[k].is_tautology) << print(fs[k]);
    }
  }
}

TEST(Decide, EntailsExamples) {
  EXPECT_TRUE(entails({P("q")}, P("q"), Variant::Mvs5, {"q"}, R3).is_tautology);
  EXPECT_TRUE(entails({P("q"), P("q -> r")}, P("r"), Variant::Mvkd45, {"q", "r"}, R3).is_tautology);
  EXPECT_FALSE(entails({P("q -> r")}, P("r"), Variant::Mvs5, {"q", "r"}, R3).is_tautology);
  std::mt19937_64 rng(53);
  auto sig = modal_signature({"q"}, R3);
  for (int k = 0; k < 50; ++k) {
    Formula f = random_formula(sig, 3, rng);
    EXPECT_EQ(entails({}, f, Variant::Mvkd45, {"q"}, R3).is_tautology,
              is_one_tautology(f, Variant::Mvkd45, {"q"}, R3).is_tautology);
  }
}

TEST(Decide, EquivExamples) {
  EXPECT_TRUE(equiv_check(P("dia_p q"), P("dia (p@ /\\ q)"), Variant::Mvs5, {"p@", "q"}, R3).is_tautology);
  EXPECT_TRUE(equiv_check(P("q"), P("!!q"), Variant::Mvs5, {"q"}, R3).is_tautology);
  EXPECT_FALSE(equiv_check(P("q"), P("q & q"), Variant::Mvs5, {"q"}, R3).is_tautology);
}

TEST(Decide, NecessityComparisonReadings) {
  // The box_p reading of the p-comparison is reported, not assumed.
  DecideOptions wide;
  wide.limits.max_world_types = 4096;
  const std::vector<std::string> atoms{"p@", "q", "r"};
  auto d = equiv_check(P("q <|p r"), P("box_p q -> box_p r"), Variant::Mvs5, atoms, R3, wide);
  EXPECT_FALSE(d.is_tautology);
  EXPECT_TRUE(equiv_check(P("!r <|p !q"), P("box_p q -> box_p r"), Variant::Mvs5, atoms, R3, wide).is_tautology);
  EXPECT_TRUE(equiv_check(P("q <|p r"), P("dia_p q -> dia_p r"), Variant::Mvs5, atoms, R3, wide).is_tautology);
}

TEST(Decide, AddingUnusedAtomsKeepsVerdicts) {
  std::mt19937_64 rng(54);
  auto sig = modal_signature({"q"}, R3);
  std::vector<Formula> fs;
  for (int k = 0; k < 100; ++k) fs.push_back(random_formula(sig, 3, rng));
  for (Variant v : {Variant::Mvs5, Variant::Mvkd45}) {
    auto small = run_checks(fs, v, {"q"}, R3);
    auto large = run_checks(fs, v, {"q", "r"}, R3);
    for (std::size_t k = 0; k < fs.size(); ++k) EXPECT_EQ(small[k].is_tautology, large[k].is_tautology);
  }
}

TEST(Decide, JobsDoNotChangeResults) {
  std::mt19937_64 rng(55);
  auto sig = modal_signature({"q", "r"}, Resolution(2));
  std::vector<Formula> fs;
  for (int k = 0; k < 60; ++k) fs.push_back(random_formula(sig, 3, rng));
  DecideOptions one, four;
  four.jobs = 4;
  one.batch_lanes = four.batch_lanes = 64;
  auto a = run_checks(fs, Variant::Mvkd45, {"q", "r"}, Resolution(2), one);
  auto b = run_checks(fs, Variant::Mvkd45, {"q", "r"}, Resolution(2), four);
  for (std::size_t k = 0; k < fs.size(); ++k) {
    EXPECT_EQ(a[k].is_tautology, b[k].is_tautology);
    EXPECT_EQ(a[k].models_checked, b[k].models_checked);
    if (a[k].countermodel) {
      EXPECT_EQ(a[k].countermodel->world, b[k].countermodel->world);
      EXPECT_EQ(a[k].countermodel->value, b[k].countermodel->value);
    }
  }
}

TEST(Decide, CapAndMismatchErrors) {
  DecideOptions tight;
  tight.limits.max_models = 100;
  EXPECT_THROW(is_one_tautology(P("box q -> dia q"), Variant::Mvkd45, {"q", "r"}, R3, tight), CapExceeded);
  EXPECT_THROW(is_one_tautology(P("q <| q"), Variant::Mvs5, {"q"}, R3), EvalError);
  EXPECT_THROW(is_one_tautology(P("r"), Variant::Mvs5, {"q"}, R3), Error);
}

TEST(Decide, WitnessBounds) {
  EXPECT_EQ(witness_bound(P("q"), Variant::Mvkd45), 1);
  EXPECT_EQ(witness_bound(P("box q"), Variant::Mvs5), 2);
  EXPECT_EQ(witness_bound(P("box q"), Variant::Mvkd45), 3);
  EXPECT_EQ(witness_bound(P("q <| r"), Variant::Qfl2), 4);
}
