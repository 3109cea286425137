#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infogreedy/info_graph.hpp"
#include "infogreedy/submodular.hpp"

namespace infogreedy {

enum class TieRule { worst_case, first_index, seeded_random };

struct TiePolicy {
  TieRule rule = TieRule::worst_case;
  std::uint64_t seed = 0;

  static TiePolicy worst() { return {TieRule::worst_case, 0}; }
  static TiePolicy first() { return {TieRule::first_index, 0}; }
  static TiePolicy random(std::uint64_t seed) { return {TieRule::seeded_random, seed}; }
};

const char* to_string(TieRule rule);

struct AgentStep {
  std::size_t agent = 0;
  ElementSet observed;               // union of the choices of N_i
  std::vector<Rational> marginals;   // one per action in X_i
  std::vector<std::size_t> argmax;   // indices into X_i, ascending
  std::size_t chosen = 0;
};

struct GreedyOutcome {
  std::vector<std::size_t> profile;  // chosen action index per agent
  ElementSet chosen_union;
  Rational value;
  std::uint64_t branches_explored = 0;  // decision nodes expanded
  std::vector<AgentStep> trace;         // the reported (worst, for worst_case) branch
};

inline constexpr std::uint64_t kDefaultBranchGuard = 1'000'000;
inline constexpr std::uint64_t kDefaultProfileGuard = 10'000'000;

// Agents decide in index order; agent i maximizes f(x | choices of N_i) over
// X_i. Under worst_case the minimum over every argmax branch is returned.
GreedyOutcome run_generalized_greedy(const Instance& inst, const InfoGraph& g,
                                     const TiePolicy& policy = TiePolicy::worst(),
                                     std::uint64_t branch_guard = kDefaultBranchGuard);

struct Optimum {
  Rational value;
  std::vector<std::size_t> profile;  // first maximizer in lexicographic order
};

Optimum brute_force_opt(const Instance& inst, std::uint64_t guard = kDefaultProfileGuard);

struct EfficiencyReport {
  Rational gamma;
  Rational opt_value;
  Rational sol_value;
  std::vector<std::size_t> opt_profile;
  GreedyOutcome greedy;
};

// Worst-case greedy value over the optimum. Throws InputError when the
// optimum is zero.
EfficiencyReport efficiency(const Instance& inst, const InfoGraph& g,
                            std::uint64_t branch_guard = kDefaultBranchGuard,
                            std::uint64_t profile_guard = kDefaultProfileGuard);

ElementSet profile_union(const Instance& inst, const std::vector<std::size_t>& profile);

// Telescoping identity sum_i f(x_i | x_1..x_{i-1}) = f(x) on a complete DAG.
// Checks every profile when there are at most `samples` of them, otherwise
// `samples` seeded draws. Throws InputError if g is not complete.
bool clique_marginal_identity_check(const Instance& inst, const InfoGraph& g,
                                    std::size_t samples = 100, std::uint64_t seed = 0);

// True iff every agent's action is the first-index argmax given the actions
// the profile assigns to its in-neighbours.
bool is_greedy_fixed_point(const Instance& inst, const InfoGraph& g,
                           const std::vector<std::size_t>& profile);

}  // namespace infogreedy
