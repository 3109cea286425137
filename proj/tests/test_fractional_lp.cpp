#include <gtest/gtest.h>

#include "infogreedy/design.hpp"
#include "infogreedy/errors.hpp"
#include "infogreedy/fractional_lp.hpp"
#include "infogreedy/generators.hpp"

using namespace infogreedy;

namespace {

InfoGraph clique_minus_edge() { return build_graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}); }
InfoGraph five_cycle() { return build_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(SolveLp, CliqueMinusEdgePrimal) {
  const auto lp = independence_program(4, maximal_cliques(clique_minus_edge()));
  const auto sol = solve_lp(lp);
  EXPECT_EQ(sol.optimum, 2);
  EXPECT_EQ(sol.point, ints({0, 0, 1, 1}));
  EXPECT_TRUE(verify_certificate(lp, sol).ok());
}

TEST(SolveLp, SingleNode) {
  EXPECT_EQ(solve_lp(independence_program(1, {VertexSet::of({0})})).optimum, 1);
}

TEST(SolveLp, FiveCyclePrimal) {
  const auto sol = solve_lp(independence_program(5, maximal_cliques(five_cycle())));
  EXPECT_EQ(sol.optimum, frac(5, 2));
  EXPECT_EQ(sol.point, std::vector<Rational>(5, frac(1, 2)));
}

TEST(SolveLp, TextbookMaximization) {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18: optimum 36 at (2, 6).
  LinearProgram lp{Sense::maximize, ints({3, 5}), {ints({1, 0}), ints({0, 2}), ints({3, 2})},
                   ints({4, 12, 18})};
  const auto sol = solve_lp(lp);
  EXPECT_EQ(sol.optimum, 36);
  EXPECT_EQ(sol.point, ints({2, 6}));
  EXPECT_EQ(sol.dual, (std::vector<Rational>{0, frac(3, 2), 1}));
}

TEST(SolveLp, MinimizationNeedsPhaseOne) {
  // min 2x + 3y, x + y >= 4, x + 3y >= 6: optimum 9 at (3, 1).
  LinearProgram lp{Sense::minimize, ints({2, 3}), {ints({1, 1}), ints({1, 3})}, ints({4, 6})};
  const auto sol = solve_lp(lp);
  EXPECT_EQ(sol.optimum, 9);
  EXPECT_EQ(sol.point, ints({3, 1}));
  EXPECT_TRUE(verify_certificate(lp, sol).ok());
}

TEST(SolveLp, DetectsInfeasibleAndUnbounded) {
  LinearProgram infeasible{Sense::maximize, ints({1}), {ints({1}), ints({-1})}, ints({1, -2})};
  EXPECT_THROW(solve_lp(infeasible), LpError);
  LinearProgram unbounded{Sense::maximize, ints({1, 1}), {ints({1, -1})}, ints({1})};
  EXPECT_THROW(solve_lp(unbounded), LpError);
}

TEST(SolveLp, RejectsRaggedRows) {
  LinearProgram lp{Sense::maximize, ints({1, 1}), {ints({1})}, ints({1})};
  EXPECT_THROW(solve_lp(lp), LpError);
}

TEST(SolveLp, DegenerateRedundantRows) {
  // Duplicate >= rows leave an artificial at zero level in the basis.
  LinearProgram lp{Sense::minimize, ints({1, 1}), {ints({1, 1}), ints({1, 1}), ints({2, 2})},
                   ints({1, 1, 2})};
  const auto sol = solve_lp(lp);
  EXPECT_EQ(sol.optimum, 1);
  EXPECT_TRUE(verify_certificate(lp, sol).ok());
}

TEST(Certificate, RejectsWrongPoint) {
  const auto lp = independence_program(5, maximal_cliques(five_cycle()));
  auto sol = solve_lp(lp);
  sol.point[0] = 1;
  EXPECT_FALSE(verify_certificate(lp, sol).primal_feasible);
  sol = solve_lp(lp);
  sol.dual.assign(sol.dual.size(), Rational(0));
  EXPECT_FALSE(verify_certificate(lp, sol).ok());
}

TEST(FormatLp, ListsConstraints) {
  const auto text = format_lp(independence_program(4, maximal_cliques(clique_minus_edge())));
  EXPECT_NE(text.find("maximize 1 x1 + 1 x2 + 1 x3 + 1 x4"), std::string::npos);
  EXPECT_NE(text.find("1 x1 + 1 x2 + 1 x4 <= 1"), std::string::npos);
}

TEST(AlphaStar, Examples) {
  EXPECT_EQ(alpha_star(clique_minus_edge()), 2);
  EXPECT_EQ(alpha_star(five_cycle()), frac(5, 2));
  EXPECT_EQ(alpha_star(complement_turan(8, 3).graph), 3);
}

TEST(KStar, Examples) {
  EXPECT_EQ(k_star(five_cycle()), frac(5, 2));
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(k_star(InfoGraph::edgeless(n)), static_cast<long>(n));
  EXPECT_EQ(k_star(clique_minus_edge()), 2);
}

TEST(FractionalNumbers, SandwichAndDualityOnRandomGraphs) {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random_graph(1 + rng() % 8, rng);
    const auto fr = fractional_numbers(g);
    const auto ex = exact_numbers(g);
    EXPECT_EQ(fr.alpha_star, fr.k_star);
    EXPECT_LE(Rational(static_cast<long>(ex.alpha)), fr.alpha_star);
    EXPECT_LE(fr.k_star, Rational(static_cast<long>(ex.clique_cover)));
    // z is feasible for every clique, y covers every agent.
    for (auto c : fr.cliques) {
      Rational s;
      for (auto v : c.members()) s += fr.z[v];
      EXPECT_LE(s, 1);
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
      Rational s;
      for (std::size_t k = 0; k < fr.cliques.size(); ++k)
        if (fr.cliques[k].contains(v)) s += fr.y[k];
      EXPECT_GE(s, 1);
    }
  }
}

TEST(FractionalNumbers, MaximalRowsMatchAllRows) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t code = 0; code < graph_count(n); code += 3) {
      const auto g = graph_from_code(n, code);
      EXPECT_EQ(alpha_star(g), alpha_star_all_cliques(g)) << n << " " << code;
    }
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph(6, rng);
    EXPECT_EQ(alpha_star(g), alpha_star_all_cliques(g));
  }
}
