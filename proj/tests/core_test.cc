#include <gtest/gtest.h>

#include "afdt/circuit.h"
#include "afdt/corpus.h"
#include "afdt/validate.h"
#include "support/test_support.h"

namespace afdt {
namespace {

std::vector<ViolationCode> codes(const std::vector<Violation>& vs) {
  std::vector<ViolationCode> out;
  for (const auto& v : vs) out.push_back(v.code);
  return out;
}

Model make(std::vector<Node> nodes, std::string tle) {
  Model m;
  for (auto& n : nodes) m.add(std::move(n));
  m.set_tle(std::move(tle));
  return m;
}

TEST(Validate, CorpusModelsAreClean) {
  for (auto name : corpus::names()) EXPECT_TRUE(validate(corpus::load(name)).empty()) << name;
}

TEST(Validate, SelfLoopIsCycle) {
  auto m = make({{.id = "TLE", .kind = NodeKind::kAnd, .children = {"TLE"}}}, "TLE");
  EXPECT_EQ(codes(validate(m)), std::vector{ViolationCode::kCycle});
}

TEST(Validate, LongerCycle) {
  auto m = make({{.id = "T", .kind = NodeKind::kOr, .children = {"G"}},
                 {.id = "G", .kind = NodeKind::kAnd, .children = {"H", "A"}},
                 {.id = "H", .kind = NodeKind::kOr, .children = {"G"}},
                 {.id = "A", .kind = NodeKind::kBas}},
                "T");
  EXPECT_EQ(codes(validate(m)), std::vector{ViolationCode::kCycle});
}

TEST(Validate, DefenseUnderOrdinaryGate) {
  auto m = make({{.id = "T", .kind = NodeKind::kOr, .children = {"A", "D"}},
                 {.id = "A", .kind = NodeKind::kBas},
                 {.id = "D", .kind = NodeKind::kBds}},
                "T");
  auto vs = validate(m);
  ASSERT_EQ(codes(vs), std::vector{ViolationCode::kBdsOutsideDefense});
  EXPECT_EQ(vs[0].node, "D");
}

TEST(Validate, AttackInDefenseSlot) {
  auto m = make({{.id = "T", .kind = NodeKind::kInh, .event = "A", .defense = "B"},
                 {.id = "A", .kind = NodeKind::kBas},
                 {.id = "B", .kind = NodeKind::kBcf}},
                "T");
  EXPECT_EQ(codes(validate(m)), std::vector{ViolationCode::kBasInDefenseSlot});
}

TEST(Validate, DefenseAsDisabler) {
  auto m = make({{.id = "T", .kind = NodeKind::kInh, .event = "A", .defense = "D", .disabler = "E"},
                 {.id = "A", .kind = NodeKind::kBas},
                 {.id = "D", .kind = NodeKind::kBds},
                 {.id = "E", .kind = NodeKind::kBds}},
                "T");
  auto vs = validate(m);
  ASSERT_EQ(codes(vs), std::vector{ViolationCode::kBdsOutsideDefense});
  EXPECT_EQ(vs[0].node, "E");
}

TEST(Validate, VoteInsideDefenseSlot) {
  auto m = make({{.id = "T", .kind = NodeKind::kInh, .event = "A", .defense = "V"},
                 {.id = "V", .kind = NodeKind::kVot, .k = 1, .children = {"D"}},
                 {.id = "A", .kind = NodeKind::kBas},
                 {.id = "D", .kind = NodeKind::kBds}},
                "T");
  EXPECT_EQ(codes(validate(m)), std::vector{ViolationCode::kSlotGate});
}

TEST(Validate, VoteThresholdAboveArity) {
  auto m = make({{.id = "X", .kind = NodeKind::kVot, .k = 3, .children = {"A", "B"}},
                 {.id = "A", .kind = NodeKind::kBas},
                 {.id = "B", .kind = NodeKind::kBas}},
                "X");
  EXPECT_EQ(codes(validate(m)), std::vector{ViolationCode::kBadArity});
}

TEST(Validate, StructuralCodes) {
  auto m = make({{.id = "T", .kind = NodeKind::kOr, .children = {"A", "Missing"}},
                 {.id = "A", .kind = NodeKind::kBas},
                 {.id = "A", .kind = NodeKind::kBcf},
                 {.id = "Lonely", .kind = NodeKind::kBas},
                 {.id = "Empty", .kind = NodeKind::kAnd}},
                "T");
  auto cs = codes(validate(m));
  EXPECT_NE(std::find(cs.begin(), cs.end(), ViolationCode::kDanglingRef), cs.end());
  EXPECT_NE(std::find(cs.begin(), cs.end(), ViolationCode::kDuplicateId), cs.end());
  EXPECT_NE(std::find(cs.begin(), cs.end(), ViolationCode::kUnreachable), cs.end());
  EXPECT_NE(std::find(cs.begin(), cs.end(), ViolationCode::kBadArity), cs.end());

  Model no_tle = make({{.id = "A", .kind = NodeKind::kBas}}, "B");
  EXPECT_EQ(codes(validate(no_tle)), std::vector{ViolationCode::kMissingTle});
}

TEST(Evaluate, Fig3) {
  auto m = corpus::load("fig3_aft");
  EXPECT_TRUE(evaluate(m, {"C1", "A1"}));
  EXPECT_FALSE(evaluate(m, {}));
  EXPECT_FALSE(evaluate(m, {"A1"}));
  EXPECT_TRUE(evaluate(m, {"A2", "C2"}));
}

TEST(Evaluate, Fig4) {
  auto m = corpus::load("fig4_afdt");
  EXPECT_FALSE(evaluate(m, {"A1", "A2", "D2"}));
  EXPECT_TRUE(evaluate(m, {"C1", "A1", "C3", "D1"}));
  EXPECT_FALSE(evaluate(m, {"C1", "A1", "D1"}));
  // D2 does not guard the C1/A1 branch.
  EXPECT_TRUE(evaluate(m, {"C1", "A1", "D2"}));
}

TEST(Evaluate, Errors) {
  auto m = corpus::load("fig3_aft");
  try {
    evaluate(m, {"G1"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownLeaf);
  }
  EXPECT_THROW(evaluate(m, {"nope"}), Error);

  auto bad = make({{.id = "T", .kind = NodeKind::kAnd, .children = {"T"}}}, "T");
  try {
    evaluate(bad, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidModel);
  }
}

TEST(Evaluate, InhibitionWithoutDefensePassesEvent) {
  auto m = make({{.id = "T", .kind = NodeKind::kInh, .event = "A", .defense = "D"},
                 {.id = "A", .kind = NodeKind::kBas},
                 {.id = "D", .kind = NodeKind::kBds}},
                "T");
  EXPECT_TRUE(evaluate(m, {"A"}));
  EXPECT_FALSE(evaluate(m, {"A", "D"}));
}

TEST(Leaves, Partition) {
  auto p = leaves(corpus::load("fig4_afdt"));
  EXPECT_EQ(p.bas, (std::vector<NodeId>{"A1", "A2"}));
  EXPECT_EQ(p.bcf, (std::vector<NodeId>{"C1", "C2", "C3"}));
  EXPECT_EQ(p.bds, (std::vector<NodeId>{"D1", "D2"}));

  auto single = leaves(make({{.id = "A", .kind = NodeKind::kBas}}, "A"));
  EXPECT_EQ(single.bas, std::vector<NodeId>{"A"});
  EXPECT_TRUE(single.bcf.empty());
  EXPECT_TRUE(single.bds.empty());

  auto g = leaves(corpus::load("gsaas"));
  std::vector<NodeId> bds = g.bds;
  std::vector<NodeId> expected{"E2E", "DP", "SCS", "DST", "TSA", "Auth", "Seg", "MFA"};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(bds, expected);
}

// Circuit evaluation agrees with the direct recursive evaluator.
TEST(EvaluateProperty, CircuitMatchesReference) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto m = testing::random_model(seed);
    ASSERT_TRUE(validate(m).empty()) << "seed " << seed;
    auto c = Circuit::compile(m);
    std::mt19937_64 rng(seed);
    auto all = leaves(m);
    std::vector<NodeId> ids = all.risk();
    ids.insert(ids.end(), all.bds.begin(), all.bds.end());
    for (int trial = 0; trial < 20; ++trial) {
      std::set<std::string> act;
      Assignment a;
      for (const auto& id : ids)
        if (rng() & 1U) {
          act.insert(id);
          a.push_back(id);
        }
      ASSERT_EQ(evaluate(c, a), testing::reference_eval(m, act)) << "seed " << seed;
    }
  }
}

TEST(EvaluateProperty, MonotoneInRiskAntiMonotoneInDefense) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto m = testing::random_model(seed);
    auto c = Circuit::compile(m);
    std::mt19937_64 rng(seed * 7 + 1);
    std::vector<std::uint8_t> risk(c.risk_count()), def(c.defense_count());
    for (int trial = 0; trial < 10; ++trial) {
      for (auto& r : risk) r = rng() & 1U;
      for (auto& d : def) d = rng() & 1U;
      const bool before = c.evaluate(risk, def);
      if (!risk.empty()) {
        auto more = risk;
        more[rng() % more.size()] = 1;
        EXPECT_TRUE(!before || c.evaluate(more, def)) << "seed " << seed;
      }
      if (!def.empty()) {
        auto more = def;
        more[rng() % more.size()] = 1;
        EXPECT_TRUE(before || !c.evaluate(risk, more)) << "seed " << seed;
      }
    }
  }
}

TEST(EvaluateProperty, SharingMatchesDuplication) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto m = testing::random_model(seed);
    auto tree = testing::unshare_gates(m);
    ASSERT_TRUE(validate(tree).empty()) << "seed " << seed;
    auto a = Circuit::compile(m), b = Circuit::compile(tree);
    ASSERT_EQ(a.risk_ids(), b.risk_ids());
    ASSERT_EQ(a.defense_ids(), b.defense_ids());
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> risk(a.risk_count()), def(a.defense_count());
    for (int trial = 0; trial < 30; ++trial) {
      for (auto& r : risk) r = rng() & 1U;
      for (auto& d : def) d = rng() & 1U;
      EXPECT_EQ(a.evaluate(risk, def), b.evaluate(risk, def));
    }
  }
}

TEST(EvaluateProperty, AllRiskNoDefenseActivatesWhenCutsExist) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto m = testing::random_model(seed);
    const bool has_cuts = !minimal_cut_sets(m, {}).cuts.empty();
    if (has_cuts) { EXPECT_TRUE(evaluate(m, leaves(m).risk())) << "seed " << seed; }
  }
}

}  // namespace
}  // namespace afdt
