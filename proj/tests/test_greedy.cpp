#include <gtest/gtest.h>

#include <algorithm>
#include <optional>

#include "infogreedy/errors.hpp"
#include "infogreedy/fractional_lp.hpp"
#include "infogreedy/generators.hpp"
#include "infogreedy/greedy.hpp"

using namespace infogreedy;

namespace {

Instance cover_example() {
  return make_instance(build_wsc({{2, 1, 3, 3, 1}}),
                       {{ElementSet{0}, ElementSet{2}},
                        {ElementSet{1}, ElementSet{2}},
                        {ElementSet{3}, ElementSet{4}},
                        {ElementSet{3}, ElementSet{4}}});
}
InfoGraph cover_graph() { return build_graph(4, {{1, 3}, {2, 3}, {1, 4}}); }

Instance tie_example() {
  return make_instance(build_wsc({{1, 1, 1}}), {{ElementSet{1}, ElementSet{0}},
                                                {ElementSet{1}},
                                                {ElementSet{1}, ElementSet{2}}});
}
InfoGraph tie_graph() { return build_graph(3, {{1, 2}}); }

// Minimum over every tie branch by plain recursion, no memo.
Rational naive_worst(const Instance& inst, const InfoGraph& g, std::vector<std::size_t>& profile,
                     std::size_t k) {
  if (k == inst.n()) return inst.oracle.evaluate(profile_union(inst, profile));
  ElementSet seen;
  for (auto j : g.in_neighbors(k).members()) seen |= inst.actions[j][profile[j]];
  std::vector<Rational> gains;
  for (const auto& a : inst.actions[k]) gains.push_back(marginal(inst.oracle, a, seen));
  const Rational top = *std::max_element(gains.begin(), gains.end());
  std::optional<Rational> best;
  for (std::size_t a = 0; a < gains.size(); ++a) {
    if (gains[a] != top) continue;
    profile[k] = a;
    auto v = naive_worst(inst, g, profile, k + 1);
    if (!best || v < *best) best = v;
  }
  return *best;
}

std::vector<std::size_t> profile_of(std::initializer_list<std::size_t> p) { return p; }

}  // namespace

TEST(Greedy, CoverExampleOnItsGraph) {
  const auto out = run_generalized_greedy(cover_example(), cover_graph());
  EXPECT_EQ(out.profile, profile_of({1, 1, 0, 0}));  // t3, t3, t4, t4
  EXPECT_EQ(out.value, 6);
  EXPECT_EQ(out.chosen_union, (ElementSet{2, 3}));
  ASSERT_EQ(out.trace.size(), 4u);
  EXPECT_EQ(out.trace[2].observed, (ElementSet{2}));
  EXPECT_EQ(out.trace[2].marginals, (std::vector<Rational>{3, 1}));
}

TEST(Greedy, CoverExampleWithFullInformation) {
  const auto out = run_generalized_greedy(cover_example(), InfoGraph::complete(4));
  EXPECT_EQ(out.profile, profile_of({1, 0, 0, 1}));  // t3, t2, t4, t5
  EXPECT_EQ(out.value, 8);
}

TEST(Greedy, TieExampleWorstBranch) {
  const auto out = run_generalized_greedy(tie_example(), tie_graph());
  EXPECT_EQ(out.value, 1);
  EXPECT_EQ(out.chosen_union, ElementSet{1});
  EXPECT_GT(out.branches_explored, 1u);
}

TEST(Greedy, DimensionMismatch) {
  EXPECT_THROW(run_generalized_greedy(cover_example(), InfoGraph::complete(3)), InputError);
}

TEST(Greedy, BranchGuardRefuses) {
  // Twenty agents, each torn between two fresh zero-value elements.
  const std::size_t n = 20;
  std::vector<ActionSet> actions(n);
  for (std::size_t i = 0; i < n; ++i) actions[i] = {ElementSet{2 * i}, ElementSet{2 * i + 1}};
  const auto inst = make_instance(build_wsc({std::vector<Rational>(2 * n, Rational(0))}), actions);
  try {
    run_generalized_greedy(inst, InfoGraph::edgeless(n), TiePolicy::worst(), 1000);
    FAIL() << "expected refusal";
  } catch (const GuardRefusal& e) {
    EXPECT_EQ(e.guard(), 1000u);
  }
  EXPECT_NO_THROW(run_generalized_greedy(inst, InfoGraph::edgeless(n), TiePolicy::first()));
}

TEST(Greedy, TiePoliciesAreOrdered) {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto g = random_graph(n, rng);
    const auto inst = random_wsc_instance(n, WscShape{6, 3, 2, 2}, rng);
    const auto worst = run_generalized_greedy(inst, g).value;
    EXPECT_LE(worst, run_generalized_greedy(inst, g, TiePolicy::first()).value);
    EXPECT_LE(worst, run_generalized_greedy(inst, g, TiePolicy::random(trial)).value);
    std::vector<std::size_t> scratch(n, 0);
    EXPECT_EQ(worst, naive_worst(inst, g, scratch, 0));
  }
}

TEST(Greedy, SeededRandomIsReproducible) {
  Rng rng(2);
  const auto inst = random_wsc_instance(5, WscShape{4, 4, 1, 1}, rng);
  const auto g = random_graph(5, rng);
  EXPECT_EQ(run_generalized_greedy(inst, g, TiePolicy::random(99)).profile,
            run_generalized_greedy(inst, g, TiePolicy::random(99)).profile);
}

TEST(Greedy, ReportedBranchAttainsMinimum) {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const auto g = random_graph(n, rng);
    const auto inst = random_wsc_instance(n, WscShape{5, 3, 2, 1}, rng);
    const auto out = run_generalized_greedy(inst, g);
    EXPECT_EQ(inst.oracle.evaluate(profile_union(inst, out.profile)), out.value);
    for (const auto& step : out.trace)
      EXPECT_NE(std::find(step.argmax.begin(), step.argmax.end(), step.chosen), step.argmax.end());
  }
}

TEST(BruteForce, Examples) {
  const auto opt = brute_force_opt(cover_example());
  EXPECT_EQ(opt.value, 9);
  EXPECT_EQ(opt.profile, profile_of({0, 1, 0, 1}));  // t1, t3, t4, t5
  EXPECT_EQ(brute_force_opt(tie_example()).value, 3);
  const auto single = make_instance(build_wsc({{1, 4, 2}}), {{ElementSet{0}, ElementSet{1}, ElementSet{2}}});
  EXPECT_EQ(brute_force_opt(single).value, 4);
}

TEST(BruteForce, RefusesAboveGuard) {
  std::vector<ActionSet> actions(8, ActionSet{ElementSet{0}, ElementSet{1}, ElementSet{2}});
  const auto inst = make_instance(build_wsc({{1, 1, 1}}), actions);
  EXPECT_THROW(brute_force_opt(inst, 1000), GuardRefusal);
  EXPECT_EQ(brute_force_opt(inst, 10000).value, 3);
}

TEST(Efficiency, Examples) {
  EXPECT_EQ(efficiency(cover_example(), cover_graph()).gamma, frac(6, 9));
  EXPECT_EQ(efficiency(tie_example(), tie_graph()).gamma, frac(1, 3));
}

TEST(Efficiency, DegenerateOptimumRejected) {
  const auto inst = make_instance(build_wsc({{0, 0}}), {{ElementSet{0}}, {ElementSet{1}}});
  EXPECT_THROW(efficiency(inst, InfoGraph::edgeless(2)), InputError);
}

TEST(Efficiency, FullInformationFloorOfOneHalf) {
  Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto inst = trial % 2 ? random_vta_instance(n, 10, rng)
                                : random_wsc_instance(n, WscShape{}, rng);
    EXPECT_GE(efficiency(inst, InfoGraph::complete(n)).gamma, frac(1, 2));
  }
}

TEST(Efficiency, LowerBoundOnRandomGraphs) {
  Rng rng(37);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto g = random_graph(n, rng);
    const auto inst = random_wsc_instance(n, WscShape{}, rng);
    EXPECT_GE(efficiency(inst, g).gamma, 1 / (alpha_star(g) + 1));
  }
}

TEST(MarginalIdentity, CoverExampleProfile) {
  const auto inst = cover_example();
  // Gains 3 (t3), 1 (t2), 3 (t4), 1 (t5).
  const std::vector<std::size_t> profile{1, 0, 0, 1};
  Rational sum;
  ElementSet prefix;
  for (std::size_t i = 0; i < 4; ++i) {
    sum += marginal(inst.oracle, inst.actions[i][profile[i]], prefix);
    prefix |= inst.actions[i][profile[i]];
  }
  EXPECT_EQ(sum, 8);
  EXPECT_EQ(inst.oracle.evaluate(prefix), 8);
  EXPECT_TRUE(clique_marginal_identity_check(inst, InfoGraph::complete(4)));
}

TEST(MarginalIdentity, RandomInstances) {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto inst = random_wsc_instance(n, WscShape{}, rng);
    EXPECT_TRUE(clique_marginal_identity_check(inst, InfoGraph::complete(n), 100, trial));
  }
}

TEST(MarginalIdentity, RejectsNonClique) {
  EXPECT_THROW(clique_marginal_identity_check(cover_example(), cover_graph()), InputError);
}

TEST(FixedPoint, FirstIndexProfileIsStable) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto g = random_graph(n, rng);
    const auto inst = random_wsc_instance(n, WscShape{}, rng);
    const auto out = run_generalized_greedy(inst, g, TiePolicy::first());
    EXPECT_TRUE(is_greedy_fixed_point(inst, g, out.profile));
  }
}

TEST(FixedPoint, DetectsNonGreedyProfile) {
  EXPECT_FALSE(is_greedy_fixed_point(cover_example(), cover_graph(), {0, 0, 0, 0}));
}

TEST(Information, MoreEdgesOnlyGrowObservedSets) {
  Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    const auto sparse = random_graph(n, rng);
    auto edges = sparse.edges();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!sparse.has_edge(i, j) && rng() % 2) edges.emplace_back(i, j);
    const auto dense = InfoGraph::from_edges(n, edges);
    for (std::size_t i = 0; i < n; ++i)
      EXPECT_TRUE(sparse.in_neighbors(i).is_subset_of(dense.in_neighbors(i)));
  }
}
