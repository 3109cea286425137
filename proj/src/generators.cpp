#include "infogreedy/generators.hpp"

#include <algorithm>
#include <numeric>

#include "infogreedy/errors.hpp"
#include "infogreedy/greedy.hpp"

namespace infogreedy {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

bool has_positive_optimum(const Instance& inst) {
  return brute_force_opt(inst).value > 0;
}

}  // namespace

InfoGraph random_graph(std::size_t n, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : all_pairs(n))
    if (rng() & 1u) edges.push_back(e);
  return InfoGraph::from_edges(n, edges);
}

std::uint64_t graph_count(std::size_t n) {
  const auto pairs = n * (n - (n ? 1 : 0)) / 2;
  if (pairs >= 64) throw GuardRefusal("graph enumeration refused", 63, pairs);
  return std::uint64_t{1} << pairs;
}

InfoGraph graph_from_code(std::size_t n, std::uint64_t code) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const auto pairs = all_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((code >> k) & 1u) edges.push_back(pairs[k]);
  return InfoGraph::from_edges(n, edges);
}

std::uint64_t canonical_code(const InfoGraph& g) {
  const auto n = g.n();
  if (n > 8) throw GuardRefusal("canonical form refused", 8, n);
  const auto pairs = all_pairs(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (g.adjacent(perm[pairs[k].first], perm[pairs[k].second])) code |= std::uint64_t{1} << k;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Instance random_wsc_instance(std::size_t n, const WscShape& shape, Rng& rng) {
  for (;;) {
    const std::size_t targets = 1 + rng() % shape.max_targets;
    WeightedSetCoverSpec spec;
    for (std::size_t t = 0; t < targets; ++t)
      spec.target_values.emplace_back(static_cast<long>(rng() % (shape.max_value + 1)));
    std::vector<ActionSet> actions(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t count = 1 + rng() % shape.max_actions;
      for (std::size_t k = 0; k < count; ++k) {
        ElementSet a;
        const std::size_t size = 1 + rng() % std::min(shape.max_action_size, targets);
        while (a.size() < size) a.insert(rng() % targets);
        actions[i].push_back(a);
      }
    }
    auto inst = make_instance(build_wsc(spec), std::move(actions));
    if (has_positive_optimum(inst)) return inst;
  }
}

Instance random_vta_instance(std::size_t n, std::size_t max_ground, Rng& rng) {
  if (n == 0 || n > max_ground) throw InputError("no room for a target assignment instance");
  for (;;) {
    const std::size_t targets = 1 + rng() % (max_ground / n);
    TargetAssignmentSpec spec;
    for (std::size_t t = 0; t < targets; ++t) spec.target_values.emplace_back(static_cast<long>(rng() % 4));
    for (std::size_t i = 0; i < n; ++i) spec.success_probs.push_back(Rational(static_cast<long>(rng() % 5), 4));
    for (auto& p : spec.success_probs) p.canonicalize();
    std::vector<ActionSet> actions(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t count = 1 + rng() % 3;
      for (std::size_t k = 0; k < count; ++k)
        actions[i].push_back(ElementSet{vta_element(spec, i, rng() % targets)});
    }
    auto inst = make_instance(build_vta(spec), std::move(actions));
    if (has_positive_optimum(inst)) return inst;
  }
}

}  // namespace infogreedy
