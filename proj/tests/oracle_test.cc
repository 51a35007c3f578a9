#include "cspath/oracle.h"

#include <gtest/gtest.h>

#include "cspath/error.h"
#include "cspath/generators.h"

namespace cspath {
namespace {

ProblemInstance Make(int32_t n, std::vector<EdgeSpec> edges, std::vector<VertexId> a,
                     std::vector<VertexId> b, Label m) {
  ProblemInstance inst;
  inst.graph = Graph::Build(n, edges);
  inst.sources = std::move(a);
  inst.targets = std::move(b);
  inst.budget = m;
  return inst;
}

// 0 -> 3 via 1 (fast, heavy) or 2 (slow, light).
ProblemInstance Diamond(Label m) {
  return Make(4, {{0, 1, 1, 5}, {1, 3, 1, 5}, {0, 2, 2, 1}, {2, 3, 3, 1}}, {0}, {3}, m);
}

TEST(Dp, SingleEdge) {
  const OracleResult r = DpConstrainedShortest(Make(2, {{0, 1, 3, 1}}, {0}, {1}, 2));
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.f1, 3);
  EXPECT_EQ(r.f2, 1);
  EXPECT_EQ(r.path, (std::vector<VertexId>{0, 1}));
}

TEST(Dp, WeightMustStayBelowBudget) {
  EXPECT_FALSE(DpConstrainedShortest(Make(2, {{0, 1, 3, 5}}, {0}, {1}, 5)).feasible);
}

TEST(Dp, DiamondPrefersLightBranchUnderTightBudget) {
  const OracleResult tight = DpConstrainedShortest(Diamond(5));
  EXPECT_TRUE(tight.feasible);
  EXPECT_EQ(tight.f1, 5);
  EXPECT_EQ(tight.path, (std::vector<VertexId>{0, 2, 3}));
  const OracleResult loose = DpConstrainedShortest(Diamond(11));
  EXPECT_EQ(loose.f1, 2);
  EXPECT_EQ(loose.f2, 10);
}

TEST(Dp, UnitGridManhattanDistance) {
  GridSpec spec;
  spec.dims = {8, 8};
  spec.f1 = ValueRule::Constant(1);
  spec.f2 = ValueRule::Constant(1);
  spec.sources = SourceRule::kSet;
  spec.source_set = {0};
  spec.targets = TargetRule::kSet;
  spec.target_set = {63};
  spec.budget = 15;
  const OracleResult r = DpConstrainedShortest(GenGrid(spec));
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.f1, 14);
  spec.budget = 14;
  EXPECT_FALSE(DpConstrainedShortest(GenGrid(spec)).feasible);
}

TEST(Dp, WitnessSumsMatch) {
  for (int i = 0; i < 50; ++i) {
    const ProblemInstance inst = SuiteInstance(5, i);
    const OracleResult r = DpConstrainedShortest(inst);
    if (!r.feasible) continue;
    int64_t f1 = 0;
    Label f2 = 0;
    for (size_t j = 0; j + 1 < r.path.size(); ++j) {
      const HalfEdgeId h = inst.graph.FindHalfEdge(r.path[j], r.path[j + 1]);
      ASSERT_NE(h, kNoEdge);
      f1 += inst.graph.half_edge(h).initial_time;
      f2 += inst.graph.half_edge(h).weight;
    }
    EXPECT_EQ(f1, r.f1);
    EXPECT_EQ(f2, r.f2);
    EXPECT_LT(f2, inst.budget);
  }
}

TEST(Dp, RejectsHugeStateSpace) {
  ProblemInstance inst = Make(2, {{0, 1, 1, 1}}, {0}, {1}, kMaxOracleStates);
  EXPECT_THROW(DpConstrainedShortest(inst), Error);
}

TEST(Enumerate, AgreesWithDpOnSmallGraphs) {
  int compared = 0;
  for (int i = 0; i < 400 && compared < 60; ++i) {
    RandomGraphSpec spec;
    spec.n = 5 + i % 6;
    spec.extra_edges = i % 8;
    spec.budget = 4 + i % 12;
    spec.num_sources = 1 + i % 2;
    spec.seed = static_cast<uint64_t>(i);
    const ProblemInstance inst = GenRandomGraph(spec);
    const OracleResult dp = DpConstrainedShortest(inst);
    const OracleResult en = EnumeratePaths(inst, inst.graph.num_vertices() - 1);
    ASSERT_EQ(dp.feasible, en.feasible) << i;
    if (dp.feasible) EXPECT_EQ(dp.f1, en.f1) << i;
    ++compared;
  }
  EXPECT_EQ(compared, 60);
}

TEST(Enumerate, SearchSpaceLimit) {
  RandomGraphSpec spec;
  spec.n = 20;
  const ProblemInstance inst = GenRandomGraph(spec);
  try {
    EnumeratePaths(inst, 19);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchSpaceTooLarge);
  }
  EXPECT_NO_THROW(EnumeratePaths(inst, 6));
}

TEST(Dp, MonotoneInBudget) {
  for (int i = 0; i < 30; ++i) {
    ProblemInstance inst = SuiteInstance(8, i);
    int64_t prev = -1;
    bool prev_feasible = false;
    for (Label m = 1; m <= 40; ++m) {
      inst.budget = m;
      const OracleResult r = DpConstrainedShortest(inst);
      if (prev_feasible) {
        ASSERT_TRUE(r.feasible) << i << " M=" << m;
        EXPECT_LE(r.f1, prev) << i << " M=" << m;
      }
      prev_feasible = r.feasible;
      if (r.feasible) prev = r.f1;
    }
  }
}

TEST(Compare, Agreement) {
  const ProblemInstance inst = Diamond(5);
  SolveOutcome e;
  e.kind = OutcomeKind::kReached;
  e.f1 = 5;
  e.f2 = 2;
  const AgreementReport ok = Compare(inst, e, DpConstrainedShortest(inst));
  EXPECT_TRUE(ok.agree);
  EXPECT_TRUE(ok.dump.empty());

  e.f1 = 4;
  const AgreementReport bad = Compare(inst, e, DpConstrainedShortest(inst));
  EXPECT_FALSE(bad.agree);
  EXPECT_NE(bad.dump.find("cspath v1"), std::string::npos);

  SolveOutcome inf;
  const AgreementReport feas = Compare(inst, inf, DpConstrainedShortest(inst));
  EXPECT_FALSE(feas.agree);
}

}  // namespace
}  // namespace cspath
