#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "infogreedy/bounds.hpp"
#include "infogreedy/design.hpp"
#include "infogreedy/errors.hpp"
#include "infogreedy/fractional_lp.hpp"

using namespace infogreedy;

namespace {

// Deal nodes into r cliques one at a time and count the edges.
std::size_t dealt_edges(std::size_t n, std::size_t r) {
  std::vector<std::size_t> sizes(r, 0);
  for (std::size_t v = 0; v < n; ++v) ++sizes[v % r];
  std::size_t total = 0;
  for (auto s : sizes) total += s * (s ? s - 1 : 0) / 2;
  return total;
}

std::set<std::pair<std::size_t, std::size_t>> edge_set(const InfoGraph& g) {
  return {g.edges().begin(), g.edges().end()};
}

}  // namespace

TEST(Turan, EightIntoThree) {
  const auto d = complement_turan(8, 3);
  ASSERT_EQ(d.partition.size(), 3u);
  EXPECT_EQ(d.partition[0].size(), 3u);
  EXPECT_EQ(d.partition[1].size(), 3u);
  EXPECT_EQ(d.partition[2].size(), 2u);
  EXPECT_EQ(d.graph.edge_count(), 7u);
  for (const auto& part : d.partition) EXPECT_TRUE(d.graph.is_clique(part));
}

TEST(Turan, Extremes) {
  EXPECT_EQ(complement_turan(6, 6).graph.edge_count(), 0u);
  EXPECT_TRUE(complement_turan(6, 1).graph.is_complete());
  EXPECT_THROW(complement_turan(3, 4), InputError);
  EXPECT_THROW(complement_turan(3, 0), InputError);
}

TEST(Turan, EdgeCountMatchesDealing) {
  EXPECT_EQ(edge_count_M(10, 3), 12u);
  EXPECT_EQ(edge_count_M(10, 2), 20u);
  for (std::size_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(edge_count_M(n, n), 0u);
    for (std::size_t r = 1; r <= n; ++r) {
      EXPECT_EQ(edge_count_M(n, r), dealt_edges(n, r)) << n << "," << r;
      EXPECT_EQ(complement_turan(n, r).graph.edge_count(), dealt_edges(n, r));
    }
  }
}

TEST(Turan, IndependenceEqualsCoverEqualsFractional) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t r = 1; r <= n; ++r) {
      const auto g = complement_turan(n, r).graph;
      const auto ex = exact_numbers(g);
      EXPECT_EQ(ex.alpha, r);
      EXPECT_EQ(ex.clique_cover, r);
      EXPECT_EQ(alpha_star(g), Rational(r));
    }
}

TEST(Turan, SiblingPropertyWhenNotEdgeless) {
  for (std::size_t n = 3; n <= 9; ++n)
    for (std::size_t r = 2; r < n; ++r)
      EXPECT_TRUE(sibling_property(complement_turan(n, r).graph).has_property) << n << "," << r;
}

TEST(THat, PicksSmallestFeasibleR) {
  EXPECT_EQ(t_hat(10, 12).r, 3u);
  EXPECT_EQ(t_hat(10, 19).r, 3u);
  EXPECT_EQ(t_hat(10, 20).r, 2u);
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(t_hat(n, 0).r, n);
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t m = 0; m <= n * (n - 1) / 2; ++m) {
      const auto r = t_hat(n, m).r;
      EXPECT_LE(edge_count_M(n, r), m);
      if (r > 1) EXPECT_GT(edge_count_M(n, r - 1), m);
    }
}

TEST(OptimalStructure, Examples) {
  const auto a = optimal_structure(10, 20);
  EXPECT_EQ(a.gamma_guaranteed, frac(1, 3));
  EXPECT_EQ(a.case_tag, DesignCase::t_hat);
  EXPECT_EQ(a.m_used, 20u);

  const auto b = optimal_structure(4, 5);
  EXPECT_EQ(b.case_tag, DesignCase::clique_minus_edge);
  EXPECT_EQ(b.gamma_guaranteed, frac(1, 2));
  EXPECT_TRUE(is_clique_minus_last_edge(b.graph));

  const auto c = optimal_structure(5, 10);
  EXPECT_TRUE(c.graph.is_complete());
  EXPECT_EQ(c.gamma_guaranteed, frac(1, 2));

  EXPECT_EQ(optimal_structure(4, 0).gamma_guaranteed, frac(1, 4));
  EXPECT_THROW(optimal_structure(4, 7), InputError);
  EXPECT_THROW(optimal_structure(0, 0), InputError);
}

TEST(OptimalStructure, GuaranteeMatchesBounds) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::size_t m = 0; m <= n * (n - 1) / 2; ++m) {
      const auto d = optimal_structure(n, m);
      EXPECT_LE(d.m_used, m);
      const auto b = theorem1_bounds(d.graph);
      if (b.sibling_upper) EXPECT_EQ(d.gamma_guaranteed, *b.sibling_upper);
      if (b.upper_tight) EXPECT_EQ(d.gamma_guaranteed, b.upper);
      EXPECT_GE(d.gamma_guaranteed, b.lower);
    }
}

TEST(NoSibling, FourTwoIsCliqueMinusEdge) {
  const auto w = min_edges_no_sibling(4, 2);
  EXPECT_EQ(w.m_min, 5u);
  EXPECT_EQ(edge_set(w.graph),
            edge_set(build_graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}})));
  EXPECT_EQ(w.independent_set, VertexSet::of({2, 3}));
}

TEST(NoSibling, TenThree) { EXPECT_EQ(min_edges_no_sibling(10, 3).m_min, 23u); }

TEST(NoSibling, WitnessesLackTheProperty) {
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t r = 2; r < n; ++r) {
      const auto w = min_edges_no_sibling(n, r);
      EXPECT_EQ(w.graph.edge_count(), w.m_min);
      const auto ex = exact_numbers(w.graph);
      EXPECT_EQ(ex.alpha, r);
      ASSERT_EQ(ex.max_independent_sets.size(), 1u);
      EXPECT_EQ(ex.max_independent_sets[0], w.independent_set);
      EXPECT_FALSE(sibling_property(w.graph).has_property) << n << "," << r;
    }
}

TEST(NoSibling, RejectsOutOfRange) {
  EXPECT_THROW(min_edges_no_sibling(5, 5), InputError);
  EXPECT_THROW(min_edges_no_sibling(5, 1), InputError);
}

TEST(Curve, SingleAgent) {
  const auto c = efficiency_curve(1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].gamma, 1);
}

TEST(Curve, NondecreasingInBudget) {
  for (std::size_t n = 1; n <= 14; ++n) {
    const auto c = efficiency_curve(n);
    ASSERT_EQ(c.size(), n * (n - 1) / 2 + 1);
    for (std::size_t i = 1; i < c.size(); ++i) {
      EXPECT_EQ(c[i].m, i);
      EXPECT_GE(c[i].gamma, c[i - 1].gamma) << "n=" << n << " m=" << i;
    }
  }
}

TEST(Curve, TenAgentSamples) {
  const auto c = efficiency_curve(10);
  EXPECT_EQ(c[12].gamma, frac(1, 4));
  EXPECT_EQ(c[19].r, 3u);
  EXPECT_EQ(c[20].gamma, frac(1, 3));
  EXPECT_EQ(c[44].case_tag, DesignCase::clique_minus_edge);
  EXPECT_EQ(c[45].gamma, frac(1, 2));
}
