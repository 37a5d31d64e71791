#include <gtest/gtest.h>

#include "afdt/analysis.h"
#include "afdt/corpus.h"
#include "afdt/validate.h"
#include "support/test_support.h"

namespace afdt {
namespace {

using Sets = std::vector<CutSet>;

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidModel;
}

TEST(Mcs, Fig3) {
  auto f = minimal_cut_sets(corpus::load("fig3_aft"), {});
  EXPECT_EQ(f.cuts, (Sets{{"A1", "A2"}, {"A1", "C1"}, {"A1", "C2"}, {"A2", "C2"}}));
}

TEST(Mcs, Fig4PerDefenseSubset) {
  auto m = corpus::load("fig4_afdt");
  const Sets none{{"A1", "A2"}, {"A1", "C1"}, {"A1", "C2"}, {"A2", "C2"}};
  EXPECT_EQ(minimal_cut_sets(m, {}).cuts, none);
  EXPECT_EQ(minimal_cut_sets(m, {"D1"}).cuts, (Sets{{"A1", "A2"}, {"A1", "C2"}, {"A2", "C2"}, {"A1", "C1", "C3"}}));
  EXPECT_EQ(minimal_cut_sets(m, {"D2"}).cuts, (Sets{{"A1", "C1"}}));
  EXPECT_EQ(minimal_cut_sets(m, {"D1", "D2"}).cuts, (Sets{{"A1", "C1", "C3"}}));
  // Defense order in the request is irrelevant.
  EXPECT_EQ(minimal_cut_sets(m, {"D2", "D1"}).cuts, (Sets{{"A1", "C1", "C3"}}));
  EXPECT_EQ(minimal_cut_sets(m, {"D2", "D1"}).defense, (DefenseSet{"D1", "D2"}));
}

TEST(Mcs, GsaasNoDefense) {
  auto m = corpus::load("gsaas");
  auto f = minimal_cut_sets(m, {});
  EXPECT_EQ(f.cuts.size(), 22u);
  EXPECT_EQ(f.cuts, testing::oracle_mcs(m, {}));
}

TEST(Mcs, GsaasSegmentationRemovesLateralPairs) {
  auto m = corpus::load("gsaas");
  auto table = mcs_table(m, std::vector<DefenseSet>{{}, {"Seg"}});
  ASSERT_EQ(table.size(), 2u);
  auto is_as_pair = [](const CutSet& c) {
    return c.size() == 2 && c[0].rfind("AS", 0) == 0 && c[1].rfind("AS", 0) == 0;
  };
  EXPECT_EQ(std::count_if(table[0].cuts.begin(), table[0].cuts.end(), is_as_pair), 10);
  EXPECT_EQ(std::count_if(table[1].cuts.begin(), table[1].cuts.end(), is_as_pair), 0);
  EXPECT_EQ(table[1].cuts.size(), table[0].cuts.size() - 10);
}

TEST(Mcs, NeverFiringTopHasEmptyFamily) {
  Model m;
  m.add({.id = "T", .kind = NodeKind::kInh, .event = "A", .defense = "D"});
  m.add({.id = "A", .kind = NodeKind::kBas});
  m.add({.id = "D", .kind = NodeKind::kBds});
  m.set_tle("T");
  EXPECT_TRUE(minimal_cut_sets(m, {"D"}).cuts.empty());
  EXPECT_EQ(minimal_cut_sets(m, {}).cuts, (Sets{{"A"}}));
}

TEST(Mcs, Errors) {
  auto m = corpus::load("fig4_afdt");
  EXPECT_EQ(error_of([&] { minimal_cut_sets(m, {"A1"}); }), ErrorCode::kUnknownDefense);
  EXPECT_EQ(error_of([&] { minimal_cut_sets(m, {"NOPE"}); }), ErrorCode::kUnknownDefense);

  Limits tight;
  tight.max_cuts = 3;
  EXPECT_EQ(error_of([&] { minimal_cut_sets(corpus::load("gsaas"), {}, tight); }), ErrorCode::kBudgetExceeded);

  Limits small;
  small.max_brute_force_leaves = 4;
  EXPECT_EQ(error_of([&] { brute_force_mcs(m, {}, small); }), ErrorCode::kTooLarge);

  Limits few;
  few.max_defense_subsets = 3;
  EXPECT_EQ(error_of([&] { mcs_table(m, std::nullopt, few); }), ErrorCode::kTooManyDefenses);
  EXPECT_EQ(mcs_table(m, std::nullopt).size(), 4u);
}

TEST(Mcs, TableOrder) {
  auto t = mcs_table(corpus::load("fig4_afdt"));
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0].defense, DefenseSet{});
  EXPECT_EQ(t[1].defense, DefenseSet{"D1"});
  EXPECT_EQ(t[2].defense, DefenseSet{"D2"});
  EXPECT_EQ(t[3].defense, (DefenseSet{"D1", "D2"}));
  EXPECT_EQ(all_subsets({"b", "a"}), (std::vector<DefenseSet>{{}, {"a"}, {"b"}, {"a", "b"}}));
}

TEST(Canonical, Order) {
  std::vector<IdSet> f{{"b", "a"}, {"z"}, {"a", "b"}, {"c", "a"}};
  canonicalize(f);
  EXPECT_EQ(f, (std::vector<IdSet>{{"z"}, {"a", "b"}, {"a", "c"}}));
  EXPECT_TRUE(canonical_less({"z"}, {"a", "b"}));
  EXPECT_TRUE(canonical_less({"A1", "C1"}, {"A1", "C2"}));
}

TEST(Impact, Fig4) {
  auto es = defense_impact(corpus::load("fig4_afdt"));
  ASSERT_EQ(es.size(), 4u);
  EXPECT_EQ(es[0].mcs, (CutSet{"A1", "A2"}));
  EXPECT_EQ(es[0].neutralizing, (Sets{{"D2"}}));
  EXPECT_EQ(es[0].eradicating, (Sets{{"D2"}}));
  EXPECT_TRUE(es[0].hardened_by.empty());

  EXPECT_EQ(es[1].mcs, (CutSet{"A1", "C1"}));
  EXPECT_EQ(es[1].neutralizing, (Sets{{"D1"}}));
  EXPECT_TRUE(es[1].eradicating.empty());
  ASSERT_EQ(es[1].hardened_by.size(), 1u);
  EXPECT_EQ(es[1].hardened_by.at({"D1"}), (Sets{{"A1", "C1", "C3"}}));
}

TEST(Impact, GsaasRows) {
  auto m = corpus::load("gsaas");
  auto es = defense_impact(m);
  ASSERT_EQ(es.size(), 22u);
  int unprotected = 0;
  for (const auto& e : es) unprotected += e.eradicating.empty();
  EXPECT_EQ(unprotected, 6);
  for (const auto& e : es)
    if (testing::label_sets(m, {e.mcs}) == Sets{{"HE", "Pass", "Uname"}}) { EXPECT_EQ(e.eradicating, (Sets{{"MFA"}})); }
}

// Exhaustive oracle on random models, all defense subsets.
TEST(McsProperty, MatchesBruteForceAndOracle) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto m = testing::random_model(seed);
    for (const auto& d : all_subsets(leaves(m).bds)) {
      auto fast = minimal_cut_sets(m, d);
      ASSERT_EQ(fast.cuts, testing::oracle_mcs(m, d)) << "seed " << seed;
      ASSERT_EQ(fast, brute_force_mcs(m, d)) << "seed " << seed;
    }
  }
}

TEST(McsProperty, SoundMinimalAntichain) {
  for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
    auto m = testing::random_model(seed);
    for (const auto& d : all_subsets(leaves(m).bds)) {
      auto f = minimal_cut_sets(m, d);
      for (std::size_t i = 0; i < f.cuts.size(); ++i) {
        const auto& c = f.cuts[i];
        std::set<std::string> act(c.begin(), c.end());
        act.insert(d.begin(), d.end());
        EXPECT_TRUE(testing::reference_eval(m, act)) << seed;
        for (const auto& x : c) {
          auto less = act;
          less.erase(x);
          EXPECT_FALSE(testing::reference_eval(m, less)) << seed;
        }
        for (std::size_t j = 0; j < f.cuts.size(); ++j)
          if (i != j) { EXPECT_FALSE(std::includes(c.begin(), c.end(), f.cuts[j].begin(), f.cuts[j].end())) << seed; }
      }
    }
  }
}

// Without disablers more defense never creates a cut that was not already a
// superset of a cut under less defense.
TEST(McsProperty, DefenseRefinesWithoutDisablers) {
  testing::RandomModelOptions opt;
  opt.disablers = false;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto m = testing::random_model(seed, opt);
    auto subsets = all_subsets(leaves(m).bds);
    auto table = mcs_table(m, subsets);
    for (std::size_t a = 0; a < subsets.size(); ++a)
      for (std::size_t b = 0; b < subsets.size(); ++b) {
        if (!std::includes(subsets[b].begin(), subsets[b].end(), subsets[a].begin(), subsets[a].end())) continue;
        for (const auto& cut : table[b].cuts) {
          bool covered = false;
          for (const auto& base : table[a].cuts)
            covered |= std::includes(cut.begin(), cut.end(), base.begin(), base.end());
          EXPECT_TRUE(covered) << seed;
        }
      }
  }
}

TEST(ImpactProperty, ConsistentWithTable) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto m = testing::random_model(seed);
    auto subsets = all_subsets(leaves(m).bds);
    auto table = mcs_table(m, subsets);
    std::map<DefenseSet, Sets> by;
    for (const auto& f : table) by[f.defense] = f.cuts;
    auto es = defense_impact(m);
    ASSERT_EQ(es.size(), by[{}].size());
    for (const auto& e : es) {
      for (const auto& s : e.eradicating) {
        for (const auto& cut : by[s])
          EXPECT_FALSE(std::includes(cut.begin(), cut.end(), e.mcs.begin(), e.mcs.end())) << seed;
      }
      for (const auto& s : e.neutralizing) {
        std::set<std::string> act(e.mcs.begin(), e.mcs.end());
        act.insert(s.begin(), s.end());
        EXPECT_FALSE(testing::reference_eval(m, act)) << seed;
      }
      for (const auto& [s, cuts] : e.hardened_by) {
        EXPECT_NE(std::find(e.neutralizing.begin(), e.neutralizing.end(), s), e.neutralizing.end());
        for (const auto& c : cuts) {
          EXPECT_GT(c.size(), e.mcs.size());
          EXPECT_NE(std::find(by[s].begin(), by[s].end(), c), by[s].end());
        }
      }
    }
  }
}

}  // namespace
}  // namespace afdt
