#include "infogreedy/greedy.hpp"

#include <random>
#include <unordered_map>

#include "infogreedy/errors.hpp"

namespace infogreedy {

const char* to_string(TieRule rule) {
  switch (rule) {
    case TieRule::worst_case: return "worst";
    case TieRule::first_index: return "first";
    case TieRule::seeded_random: return "random";
  }
  return "?";
}

namespace {

void check_dimensions(const Instance& inst, const InfoGraph& g) {
  if (inst.n() != g.n())
    throw InputError("instance has " + std::to_string(inst.n()) + " agents but the graph has " +
                     std::to_string(g.n()));
}

ElementSet observed_union(const Instance& inst, const InfoGraph& g, std::size_t agent,
                          const std::vector<std::size_t>& choices) {
  ElementSet u;
  for (auto j : g.in_neighbors(agent).members()) u |= inst.actions[j][choices[j]];
  return u;
}

AgentStep decide(const Instance& inst, const InfoGraph& g, std::size_t agent,
                 const std::vector<std::size_t>& choices) {
  AgentStep step;
  step.agent = agent;
  step.observed = observed_union(inst, g, agent, choices);
  const Rational base = inst.oracle.evaluate(step.observed);
  const auto& actions = inst.actions[agent];
  step.marginals.reserve(actions.size());
  for (std::size_t k = 0; k < actions.size(); ++k) {
    step.marginals.push_back(inst.oracle.evaluate(actions[k] | step.observed) - base);
    if (step.argmax.empty() || step.marginals[k] > step.marginals[step.argmax.front()])
      step.argmax.assign(1, k);
    else if (step.marginals[k] == step.marginals[step.argmax.front()])
      step.argmax.push_back(k);
  }
  return step;
}

struct StateKey {
  std::size_t agent;
  ElementSet chosen;
  std::vector<std::size_t> live;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::size_t h = k.chosen.hash() ^ (k.agent * 0x9e3779b97f4a7c15ULL);
    for (auto c : k.live) h = h * 1000003u ^ c;
    return h;
  }
};

struct Memo {
  Rational value;
  std::size_t choice;
};

// Minimum final value over all argmax branches from a partial profile.
class WorstCaseSearch {
 public:
  WorstCaseSearch(const Instance& inst, const InfoGraph& g, std::uint64_t guard)
      : inst_(inst), g_(g), guard_(guard), live_(g.n() + 1) {
    // live_[k]: agents before k still observed by someone at or after k.
    for (std::size_t k = 0; k <= g.n(); ++k)
      for (std::size_t l = k; l < g.n(); ++l)
        live_[k] = live_[k] | g.in_neighbors(l).without(VertexSet::range(k, g.n()));
  }

  Rational solve(std::size_t k, const ElementSet& chosen, std::vector<std::size_t>& choices) {
    if (k == g_.n()) return inst_.oracle.evaluate(chosen);
    StateKey key{k, chosen, {}};
    for (auto j : live_[k].members()) key.live.push_back(choices[j]);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;
    if (++expanded_ > guard_)
      throw GuardRefusal("worst-case tie enumeration refused", guard_, expanded_);

    const auto step = decide(inst_, g_, k, choices);
    Memo best{Rational(0), step.argmax.front()};
    bool first = true;
    for (auto a : step.argmax) {
      choices[k] = a;
      Rational v = solve(k + 1, chosen | inst_.actions[k][a], choices);
      if (first || v < best.value) best = {v, a};
      first = false;
    }
    choices[k] = 0;
    memo_.emplace(std::move(key), best);
    return best.value;
  }

  std::size_t choice_at(std::size_t k, const ElementSet& chosen,
                        const std::vector<std::size_t>& choices) const {
    StateKey key{k, chosen, {}};
    for (auto j : live_[k].members()) key.live.push_back(choices[j]);
    return memo_.at(key).choice;
  }

  std::uint64_t expanded() const { return expanded_; }

 private:
  const Instance& inst_;
  const InfoGraph& g_;
  std::uint64_t guard_;
  std::vector<VertexSet> live_;
  std::unordered_map<StateKey, Memo, StateKeyHash> memo_;
  std::uint64_t expanded_ = 0;
};

}  // namespace

ElementSet profile_union(const Instance& inst, const std::vector<std::size_t>& profile) {
  ElementSet u;
  for (std::size_t i = 0; i < profile.size(); ++i) u |= inst.actions[i][profile[i]];
  return u;
}

GreedyOutcome run_generalized_greedy(const Instance& inst, const InfoGraph& g,
                                     const TiePolicy& policy, std::uint64_t branch_guard) {
  check_dimensions(inst, g);
  const std::size_t n = g.n();
  GreedyOutcome out;
  out.profile.assign(n, 0);

  if (policy.rule == TieRule::worst_case) {
    WorstCaseSearch search(inst, g, branch_guard);
    std::vector<std::size_t> scratch(n, 0);
    search.solve(0, ElementSet{}, scratch);
    out.branches_explored = search.expanded();
    ElementSet chosen;
    for (std::size_t k = 0; k < n; ++k) {
      auto step = decide(inst, g, k, out.profile);
      step.chosen = search.choice_at(k, chosen, out.profile);
      out.profile[k] = step.chosen;
      chosen |= inst.actions[k][step.chosen];
      out.trace.push_back(std::move(step));
    }
  } else {
    std::mt19937_64 rng(policy.seed);
    for (std::size_t k = 0; k < n; ++k) {
      auto step = decide(inst, g, k, out.profile);
      step.chosen = policy.rule == TieRule::first_index
                        ? step.argmax.front()
                        : step.argmax[rng() % step.argmax.size()];
      out.profile[k] = step.chosen;
      out.trace.push_back(std::move(step));
    }
    out.branches_explored = n;
  }
  out.chosen_union = profile_union(inst, out.profile);
  out.value = inst.oracle.evaluate(out.chosen_union);
  return out;
}

Optimum brute_force_opt(const Instance& inst, std::uint64_t guard) {
  std::uint64_t total = 1;
  for (const auto& x : inst.actions) {
    if (total > guard / x.size())
      throw GuardRefusal("brute-force optimum refused", guard, total * x.size());
    total *= x.size();
  }

  const std::size_t n = inst.n();
  std::vector<std::size_t> profile(n, 0);
  Optimum best{inst.oracle.evaluate(profile_union(inst, profile)), profile};
  // Odometer with agent 1 as the most significant digit.
  for (;;) {
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++profile[pos] < inst.actions[pos].size()) break;
      profile[pos] = 0;
      if (pos == 0) return best;
    }
    if (n == 0) return best;
    Rational v = inst.oracle.evaluate(profile_union(inst, profile));
    if (v > best.value) best = {std::move(v), profile};
  }
}

EfficiencyReport efficiency(const Instance& inst, const InfoGraph& g, std::uint64_t branch_guard,
                            std::uint64_t profile_guard) {
  check_dimensions(inst, g);
  EfficiencyReport r;
  auto opt = brute_force_opt(inst, profile_guard);
  if (opt.value == 0) throw InputError("degenerate instance: the optimum is 0, efficiency undefined");
  r.greedy = run_generalized_greedy(inst, g, TiePolicy::worst(), branch_guard);
  r.opt_value = opt.value;
  r.opt_profile = std::move(opt.profile);
  r.sol_value = r.greedy.value;
  r.gamma = r.sol_value / r.opt_value;
  return r;
}

bool clique_marginal_identity_check(const Instance& inst, const InfoGraph& g,
                                    std::size_t samples, std::uint64_t seed) {
  check_dimensions(inst, g);
  if (!g.is_complete()) throw InputError("marginal identity check needs a complete graph");
  const std::size_t n = inst.n();

  auto holds = [&](const std::vector<std::size_t>& profile) {
    Rational sum;
    ElementSet prefix;
    for (std::size_t i = 0; i < n; ++i) {
      sum += marginal(inst.oracle, inst.actions[i][profile[i]], prefix);
      prefix |= inst.actions[i][profile[i]];
    }
    return sum == inst.oracle.evaluate(prefix);
  };

  std::uint64_t total = 1;
  bool small = true;
  for (const auto& x : inst.actions) {
    total *= x.size();
    if (total > samples) {
      small = false;
      break;
    }
  }
  std::vector<std::size_t> profile(n, 0);
  if (small) {
    for (std::uint64_t code = 0; code < total; ++code) {
      auto rest = code;
      for (std::size_t i = n; i-- > 0;) {
        profile[i] = rest % inst.actions[i].size();
        rest /= inst.actions[i].size();
      }
      if (!holds(profile)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < n; ++i) profile[i] = rng() % inst.actions[i].size();
    if (!holds(profile)) return false;
  }
  return true;
}

bool is_greedy_fixed_point(const Instance& inst, const InfoGraph& g,
                           const std::vector<std::size_t>& profile) {
  check_dimensions(inst, g);
  if (profile.size() != inst.n()) throw InputError("profile length does not match the agent count");
  for (std::size_t i = 0; i < inst.n(); ++i)
    if (decide(inst, g, i, profile).argmax.front() != profile[i]) return false;
  return true;
}

}  // namespace infogreedy
