#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mvmodal/enumerate.hpp"
#include "mvmodal/generate.hpp"
#include "mvmodal/kripke.hpp"
#include "mvmodal/semantics.hpp"

using namespace mvmodal;

namespace {

const Resolution R3(3);
TruthValue v3(int k) { return TruthValue(R3, k); }

PossibilisticModel two_worlds(int pi1, int pi2) {
  PossibilisticModel m;
  m.n = R3;
  m.atoms = {"q"};
  m.worlds = {{"w1", {v3(1)}}, {"w2", {v3(2)}}};
  m.pi = {v3(pi1), v3(pi2)};
  return m;
}

PossibilisticModel random_model(std::mt19937_64& rng, Resolution r, const std::vector<std::string>& atoms,
                                std::size_t max_worlds) {
  std::uniform_int_distribution<int> val(0, r.denominator());
  PossibilisticModel m;
  m.n = r;
  m.atoms = atoms;
  const std::size_t w = 1 + rng() % max_worlds;
  for (std::size_t k = 0; k < w; ++k) {
    World world{"w" + std::to_string(k), {}};
    for (std::size_t a = 0; a < atoms.size(); ++a) world.val.emplace_back(r, val(rng));
    m.worlds.push_back(world);
    m.pi.emplace_back(r, val(rng));
  }
  m.pi[rng() % w] = TruthValue::one(r);
  return m;
}

}  // namespace

TEST(Kripke, ValidateExamples) {
  EXPECT_TRUE(validate(two_worlds(2, 1)).empty());
  EXPECT_FALSE(validate(two_worlds(1, 1)).empty());
  PossibilisticModel empty;
  empty.n = R3;
  empty.atoms = {"q"};
  EXPECT_FALSE(validate(empty).empty());
  EXPECT_THROW(require_valid(empty), ModelError);
}

TEST(Kripke, ValidateCatchesMalformedWorlds) {
  Mvs5Model m;
  m.n = R3;
  m.atoms = {"q"};
  m.worlds = {{"w1", {v3(1)}}, {"w1", {v3(0)}}};
  EXPECT_FALSE(validate(m).empty());
  m.worlds = {{"w1", {}}};
  EXPECT_FALSE(validate(m).empty());
  m.worlds = {{"w1", {TruthValue(Resolution(2), 1)}}};
  EXPECT_FALSE(validate(m).empty());
}

TEST(Kripke, PExtensionExamples) {
  auto k = two_worlds(2, 1);
  Mvs5Model e = p_extension(k, "p@");
  auto idx = e.atom_index("p@");
  ASSERT_TRUE(idx);
  EXPECT_EQ(e.worlds[0].val[*idx], v3(2));
  EXPECT_EQ(e.worlds[1].val[*idx], v3(1));
  EXPECT_EQ(p_restriction(e, "p@"), k);
  PossibilisticModel clash = k;
  clash.atoms = {"p@"};
  EXPECT_THROW(p_extension(clash, "p@"), ModelError);
}

TEST(Kripke, PRestrictionPreconditions) {
  Mvs5Model e = p_extension(two_worlds(2, 1), "p@");
  EXPECT_THROW(p_restriction(e, "zz"), ModelError);
  auto idx = *e.atom_index("p@");
  e.worlds[0].val[idx] = v3(1);
  EXPECT_THROW(p_restriction(e, "p@"), ModelError);
}

TEST(Kripke, PExtensionRoundTripRandom) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    auto m = random_model(rng, Resolution(4), {"q", "r"}, 5);
    EXPECT_EQ(p_restriction(p_extension(m, "p@"), "p@"), m);
  }
}

TEST(Kripke, CanonicalizeMergesWithMaxPi) {
  PossibilisticModel m;
  m.n = R3;
  m.atoms = {"q"};
  m.worlds = {{"wb", {v3(2)}}, {"wa", {v3(2)}}};
  m.pi = {v3(1), v3(2)};
  auto c = canonicalize(m);
  ASSERT_EQ(c.worlds.size(), 1u);
  EXPECT_EQ(c.worlds[0].id, "wa");
  EXPECT_EQ(c.pi[0], v3(2));
  auto k = two_worlds(2, 1);
  EXPECT_EQ(canonicalize(k), k);
  EXPECT_EQ(canonicalize(canonicalize(m)), canonicalize(m));
}

TEST(Kripke, CanonicalizePreservesValues) {
  std::mt19937_64 rng(4);
  auto sig = modal_signature({"q", "r"}, R3);
  for (int k = 0; k < 150; ++k) {
    auto m = random_model(rng, R3, {"q", "r"}, 6);
    // Force duplicate valuations.
    m.worlds.push_back({"dup", m.worlds[0].val});
    m.pi.push_back(v3(static_cast<int>(rng() % 3)));
    auto c = canonicalize(m);
    Formula f = random_formula(sig, 3, rng);
    for (Variant var : {Variant::Mvs5, Variant::Mvkd45, Variant::AltBox}) {
      Evaluator a(m, var), b(c, var);
      for (const auto& w : c.worlds) EXPECT_EQ(a.at(f, w.id), b.at(f, w.id)) << print(f);
      for (std::size_t w = 0; w < m.worlds.size(); ++w) {
        auto same = std::find_if(c.worlds.begin(), c.worlds.end(),
                                 [&](const World& x) { return x.val == m.worlds[w].val; });
        ASSERT_NE(same, c.worlds.end());
        EXPECT_EQ(a.at(f, w), b.at(f, same->id));
      }
    }
  }
}

TEST(Kripke, EnumerationCounts) {
  EXPECT_EQ(enum_mvs5_canonical({"q"}, R3).size(), 7u);
  EXPECT_EQ(enum_mvs5_canonical({"q"}, Resolution(2)).size(), 3u);
  EXPECT_EQ(enum_mvs5_canonical({"q", "r"}, Resolution(2)).size(), 15u);
  EXPECT_EQ(enum_possibilistic_canonical({"q"}, R3).size(), 37u);
  EXPECT_EQ(enum_possibilistic_canonical({"q"}, Resolution(2)).size(), 5u);
  EXPECT_EQ(canonical_count(ModelClass::Mvs5, 9, R3), 511u);
  EXPECT_EQ(canonical_count(ModelClass::Possibilistic, 4, Resolution(2)), 81u - 16u);
}

TEST(Kripke, EnumeratedModelsAreValidAndDistinct) {
  auto ms = enum_possibilistic_canonical({"q", "r"}, Resolution(2));
  std::set<std::vector<std::pair<std::vector<int>, int>>> seen;
  for (const auto& m : ms) {
    EXPECT_TRUE(validate(m).empty());
    std::vector<std::pair<std::vector<int>, int>> key;
    for (std::size_t w = 0; w < m.worlds.size(); ++w) {
      std::vector<int> val;
      for (auto x : m.worlds[w].val) val.push_back(x.num());
      key.emplace_back(val, m.pi[w].num());
    }
    std::sort(key.begin(), key.end());
    EXPECT_TRUE(seen.insert(key).second);
  }
  for (const auto& m : enum_mvs5_canonical({"q", "r"}, R3)) EXPECT_TRUE(validate(m).empty());
}

TEST(Kripke, EnumerationIsSizeFirst) {
  CanonicalEnumerator e(ModelClass::Possibilistic, {"q"}, R3);
  ModelBatch b;
  int last = 0;
  std::uint64_t seen = 0;
  while (e.next(b, 5)) {
    EXPECT_GE(b.rows, last);
    last = b.rows;
    EXPECT_EQ(b.first_index, seen);
    seen += b.lanes;
  }
  EXPECT_EQ(seen, e.total());
}

TEST(Kripke, EnumerationCoversRandomModels) {
  std::mt19937_64 rng(5);
  auto ms = enum_possibilistic_canonical({"q", "r"}, Resolution(2));
  auto key = [](const PossibilisticModel& m) {
    std::vector<std::pair<std::vector<int>, int>> k;
    for (std::size_t w = 0; w < m.worlds.size(); ++w) {
      std::vector<int> val;
      for (auto x : m.worlds[w].val) val.push_back(x.num());
      k.emplace_back(val, m.pi[w].num());
    }
    std::sort(k.begin(), k.end());
    return k;
  };
  std::set<decltype(key(ms[0]))> all;
  for (const auto& m : ms) all.insert(key(m));
  for (int k = 0; k < 200; ++k) {
    auto m = canonicalize(random_model(rng, Resolution(2), {"q", "r"}, 7));
    EXPECT_TRUE(all.count(key(m)));
  }
}

TEST(Kripke, CapsAreEnforced) {
  EXPECT_THROW(enum_mvs5_canonical({"q", "r", "s"}, R3), CapExceeded);
  EXPECT_THROW(enum_possibilistic_canonical({"q", "r"}, R3, {16, 100}), CapExceeded);
}
