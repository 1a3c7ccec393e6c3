#include "committee/dp.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace committee;
using namespace committee::testing;

namespace {

// a=5, b=1, c=4, d=3; first = {a,b}, second = {c,d}.
struct TwoLabels {
  CommitteeOrder order = CommitteeOrder::by_score(rationals({5, 1, 4, 3}));
  Labeling labeling{4, {{"first", {0, 1}}, {"second", {2, 3}}}};
};

std::size_t table_bound(const DpStats& s, int k) {
  const std::size_t side = static_cast<std::size_t>(k + 1) * (k + 1);
  return s.nodes * side + s.nodes * s.max_children * side;
}

}  // namespace

TEST(Dp, DominanceKeepsFirstAhead) {
  TwoLabels t;
  const auto r = solve_dp(t.labeling, {{}, {{0, 1}}}, t.order, 2);
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(*r.committee, (CandidateSet{0, 2}));
  EXPECT_EQ(r.score, Rational(9));
  EXPECT_EQ(r.solver, "dp");
}

TEST(Dp, MutualDominanceBalancesCounts) {
  TwoLabels t;
  const ConstraintSet cs{{}, {{0, 1}, {1, 0}}};
  const auto two = solve_dp(t.labeling, cs, t.order, 2);
  ASSERT_TRUE(two.feasible());
  EXPECT_EQ(*two.committee, (CandidateSet{0, 2}));
  EXPECT_FALSE(solve_dp(t.labeling, cs, t.order, 3).feasible());
}

TEST(Dp, EmptyCommittee) {
  TwoLabels t;
  const auto r = solve_dp(t.labeling, {{}, {{0, 1}}}, t.order, 0);
  ASSERT_TRUE(r.feasible());
  EXPECT_TRUE(r.committee->empty());
}

TEST(Dp, UnlabeledCandidatesFillSeats) {
  const auto order = CommitteeOrder::by_score(rationals({1, 2, 9, 8}));
  const Labeling labeling(4, {{"x", {0}}, {"y", {1}}});
  const auto r = solve_dp(labeling, {{}, {{0, 1}}}, order, 3);
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(*r.committee, (CandidateSet{0, 2, 3}));
}

TEST(Preprocess, UpperBoundsPropagateDown) {
  TwoLabels t;
  const ConstraintSet cs{{{0, 0, 1}}, {{0, 1}}};
  const auto pre = preprocess_intervals(t.labeling, cs, t.order);
  EXPECT_EQ(pre.upper_bound[0], 1);
  EXPECT_EQ(pre.upper_bound[1], 1);
  EXPECT_EQ(pre.retained[0], (CandidateSet{0}));
  EXPECT_EQ(pre.retained[1], (CandidateSet{2}));
  EXPECT_EQ(pre.removed, (CandidateSet{1, 3}));
  const auto r = solve_dp(pre, 2);
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(*r.committee, (CandidateSet{0, 2}));
}

TEST(Preprocess, LowerBoundsMakeObligatoryCandidates) {
  TwoLabels t;
  const ConstraintSet cs{{{1, 1, 4}}, {{0, 1}}};
  const auto pre = preprocess_intervals(t.labeling, cs, t.order);
  EXPECT_EQ(pre.lower_bound[0], 1);
  EXPECT_EQ(pre.lower_bound[1], 1);
  EXPECT_EQ(pre.obligatory, (CandidateSet{0, 2}));
  EXPECT_EQ(pre.order.kind(), CommitteeOrder::Kind::wrapped);
  // {a,c} holds both obligatory candidates; {a,b} only one.
  EXPECT_EQ(pre.order.compare({0, 2}, {0, 1}), std::weak_ordering::greater);
}

TEST(Preprocess, NoIntervalsIsIdentity) {
  TwoLabels t;
  const auto pre = preprocess_intervals(t.labeling, {{}, {{0, 1}}}, t.order);
  EXPECT_TRUE(pre.obligatory.empty());
  EXPECT_TRUE(pre.removed.empty());
  EXPECT_EQ(pre.order.kind(), CommitteeOrder::Kind::score);
  EXPECT_FALSE(pre.infeasible.has_value());
}

TEST(Preprocess, LowerBoundAboveRetainedIsInfeasible) {
  TwoLabels t;
  const ConstraintSet cs{{{0, 0, 1}, {1, 2, 2}}, {{0, 1}}};
  const auto pre = preprocess_intervals(t.labeling, cs, t.order);
  EXPECT_TRUE(pre.infeasible.has_value());
  EXPECT_FALSE(solve_dp(pre, 2).feasible());
}

TEST(Dp, RejectsUnsupportedInstances) {
  TwoLabels t;
  const Labeling overlapping(4, {{"x", {0, 1}}, {"y", {1, 2}}});
  EXPECT_THROW(preprocess_intervals(overlapping, {}, t.order), ContractError);
  const Labeling three(4, {{"x", {0}}, {"y", {1}}, {"z", {2}}});
  EXPECT_THROW(preprocess_intervals(three, {{}, {{0, 2}, {1, 2}}}, t.order), ContractError);
  EXPECT_THROW(solve_dp(t.labeling, {}, t.order, 5), ContractError);
}

TEST(Dp, MatchesOracleOnRandomInstances) {
  std::mt19937_64 rng(41);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto instance = random_instance(rng, LabelMode::disjoint, DominanceShape::tree_like);
    // Vary the rule and order beyond the generator's score defaults.
    switch (trial % 4) {
      case 1: instance.order = OrderKind::leximax; break;
      case 2: instance.order = OrderKind::leximin; break;
      case 3:
        instance.rule = StvRule{trial % 8 == 3 ? StvVariant::simple : StvVariant::droop_gregory};
        instance.order = OrderKind::leximax;
        break;
      default: break;
    }
    const auto order = make_order(instance);
    const int k = instance.profile.committee_size();
    DpStats stats;
    const auto dp = solve_dp(instance.labeling, instance.constraints, order, k, &stats);
    const auto oracle = solve_bruteforce(instance.profile, instance.labeling, instance.constraints, k, order);
    ASSERT_EQ(dp.feasible(), oracle.feasible()) << "trial " << trial;
    EXPECT_LE(stats.table_entries, table_bound(stats, k));
    if (!dp.feasible()) continue;
    ++feasible;
    EXPECT_EQ(order.compare(*dp.committee, *oracle.committee), std::weak_ordering::equivalent);
    EXPECT_TRUE(check_committee(*dp.committee, instance.labeling, instance.constraints, k).valid());

    // Labels in one clique take equally many seats; counts never grow downward.
    const auto forest = build_dominance_graph(instance.constraints, instance.labeling);
    std::vector<int> count(instance.labeling.size(), 0);
    for (Candidate c : *dp.committee)
      for (int l : instance.labeling.labels_of(c)) ++count[l];
    for (const auto& node : forest.nodes)
      for (int l : node) EXPECT_EQ(count[l], count[node[0]]);
    for (int x = 0; x < instance.labeling.size(); ++x)
      for (int y = 0; y < instance.labeling.size(); ++y)
        if (forest.closure(x, y)) EXPECT_GE(count[x], count[y]);
  }
  EXPECT_GT(feasible, 100);
}
