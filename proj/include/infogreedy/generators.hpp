#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "infogreedy/info_graph.hpp"
#include "infogreedy/submodular.hpp"

namespace infogreedy {

using Rng = std::mt19937_64;

// Each of the n(n-1)/2 admissible edges present independently with prob 1/2.
InfoGraph random_graph(std::size_t n, Rng& rng);

// Every admissible graph on n agents, indexed by a bitmask over edges in
// lexicographic order. Requires n(n-1)/2 < 64.
InfoGraph graph_from_code(std::size_t n, std::uint64_t code);
std::uint64_t graph_count(std::size_t n);

// Smallest edge code over all relabelings of the undirected shadow; equal
// iff the shadows are isomorphic. Requires n <= 8.
std::uint64_t canonical_code(const InfoGraph& g);

struct WscShape {
  std::size_t max_targets = 10;
  std::size_t max_actions = 4;
  std::size_t max_action_size = 2;
  unsigned max_value = 3;
};

// Weighted set cover with nonzero optimum: integer values in [0, max_value],
// nonempty actions of at most max_action_size targets.
Instance random_wsc_instance(std::size_t n, const WscShape& shape, Rng& rng);

// Target assignment with probabilities in {0, 1/4, .., 1}; ground set of
// n * targets elements kept at most max_ground.
Instance random_vta_instance(std::size_t n, std::size_t max_ground, Rng& rng);

}  // namespace infogreedy
