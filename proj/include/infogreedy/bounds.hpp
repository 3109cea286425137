#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infogreedy/fractional_lp.hpp"
#include "infogreedy/greedy.hpp"
#include "infogreedy/info_graph.hpp"
#include "infogreedy/submodular.hpp"

namespace infogreedy {

struct GraphAnalysis {
  ExactNumbers exact;
  FractionalNumbers fractional;  // also carries the maximal cliques
  SiblingVerdict sibling;
};

GraphAnalysis analyze(const InfoGraph& g, std::size_t guard = kDefaultExhaustiveGuard);

struct BoundsReport {
  Rational lower;  // 1 / (alpha* + 1)
  Rational upper;  // 1 / alpha*
  Rational alpha_star;
  std::optional<Rational> sibling_upper;  // 1 / (1 + alpha), with the Sibling Property
  bool lower_tight = false;  // some instance attains `lower`
  bool upper_tight = false;  // efficiency of the graph is known to equal `upper`
};

BoundsReport theorem1_bounds(const InfoGraph& g);
BoundsReport theorem1_bounds(const InfoGraph& g, const GraphAnalysis& analysis);

// K_n without the edge (n-1, n), labels 1-based; n >= 2.
bool is_clique_minus_last_edge(const InfoGraph& g);

enum class Construction { canonical_upper, sibling_lower, handcrafted };
const char* to_string(Construction c);

struct WorstCaseInstance {
  Instance instance;
  Construction construction = Construction::handcrafted;
  Rational predicted_gamma;
  Rational realized_gamma;  // worst-case greedy over brute-force optimum
  bool certified() const { return predicted_gamma == realized_gamma; }
};

// X_i = {{u_i}, {v_i}} with a restriction-respecting oracle built from an
// optimal fractional independence point. Predicts 1 / alpha*.
WorstCaseInstance canonical_upper_instance(const InfoGraph& g);

// Weighted set cover on targets t_1..t_n (plus a zero-value decoy when the
// witness is not clean). Predicts 1 / (1 + alpha). Throws InputError when the
// graph lacks the Sibling Property.
WorstCaseInstance sibling_lower_instance(const InfoGraph& g);

struct SearchBudget {
  std::uint64_t exhaustive_limit = 200'000;  // skip the tiny family above this
  std::size_t random_samples = 200;
};

struct SearchResult {
  Rational min_gamma;
  WorstCaseInstance witness;
  std::uint64_t instances_evaluated = 0;
  bool exhaustive_family_run = false;
};

// Minimum efficiency over the canonical and sibling constructions, the tiny
// exhaustive weighted-cover family (when within budget) and seeded random
// weighted-cover instances. Throws ConsistencyError if any instance falls
// below 1 / (alpha* + 1).
SearchResult adversarial_search(const InfoGraph& g, const SearchBudget& budget = {},
                                std::uint64_t seed = 0);

}  // namespace infogreedy
