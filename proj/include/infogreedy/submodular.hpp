#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "infogreedy/element_set.hpp"
#include "infogreedy/info_graph.hpp"
#include "infogreedy/rational.hpp"

namespace infogreedy {

struct WeightedSetCoverSpec {
  std::vector<Rational> target_values;
};

struct TargetAssignmentSpec {
  std::vector<Rational> target_values;
  std::vector<Rational> success_probs;  // one per agent
};

// Ground set {u_1..u_n, v_1..v_n}: u_i has id i, v_i has id n + i.
struct CappedSumSpec {
  std::vector<Rational> weights;
};

// One atom of a truncated coverage function: a measure carried jointly by
// the u-elements of `agents`.
struct CoverageAtom {
  VertexSet agents;
  Rational measure;
};

// Same ground set as CappedSumSpec. f(A) = min(1, measure of atoms touched by
// the u-part of A) + sum of v-weights, where the v-weight of agent i is the
// total measure of atoms containing i.
struct CappedCoverageSpec {
  std::size_t agents = 0;
  std::vector<CoverageAtom> atoms;
};

struct CustomOracle {
  std::string label;
};

using OracleDescription = std::variant<WeightedSetCoverSpec, TargetAssignmentSpec, CappedSumSpec,
                                       CappedCoverageSpec, CustomOracle>;

// A normalized monotone submodular set function f: 2^S -> Q>=0 behind an
// oracle interface. Immutable; copies share the value function.
class ValuationOracle {
 public:
  using ValueFn = std::function<Rational(const ElementSet&)>;

  ValuationOracle(std::size_t ground_size, ValueFn value_fn, OracleDescription description);

  std::size_t ground_size() const { return ground_size_; }
  const OracleDescription& description() const { return description_; }

  // Throws InputError when the subset names an element outside S.
  Rational evaluate(const ElementSet& subset) const;

 private:
  std::size_t ground_size_;
  ElementSet ground_;
  std::shared_ptr<const ValueFn> value_fn_;
  OracleDescription description_;
};

Rational evaluate(const ValuationOracle& oracle, const ElementSet& subset);

// f(action | base) - f(base).
Rational marginal(const ValuationOracle& oracle, const ElementSet& action, const ElementSet& base);

ValuationOracle build_wsc(const WeightedSetCoverSpec& spec);

// Element (agent i, target t) has id i * |T| + t.
ValuationOracle build_vta(const TargetAssignmentSpec& spec);
std::size_t vta_element(const TargetAssignmentSpec& spec, std::size_t agent, std::size_t target);

ValuationOracle build_capped_sum(const CappedSumSpec& spec);
// Also enforces that every clique of `g` has total weight at most 1.
ValuationOracle build_capped_sum(const CappedSumSpec& spec, const InfoGraph& g);

ValuationOracle build_capped_coverage(const CappedCoverageSpec& spec);

// Weight each agent's u- and v-element carries under a capped coverage spec.
std::vector<Rational> coverage_weights(const CappedCoverageSpec& spec);

// Wraps an arbitrary value function; the caller vouches for (or audits) it.
ValuationOracle make_custom_oracle(std::size_t ground_size, ValuationOracle::ValueFn fn,
                                   std::string label);

enum class Property { normalized, monotone, submodular };

// A local counterexample. For monotone: f(a) > f(a + x) with b = a + x. For
// submodular: x not in b, a subset of b, f(a + x) - f(a) < f(b + x) - f(b).
struct AuditWitness {
  Property property;
  ElementSet a;
  ElementSet b;
  std::optional<std::size_t> x;
};

struct AuditReport {
  bool normalized = true;
  bool monotone = true;
  bool submodular = true;
  std::vector<AuditWitness> witnesses;  // first counterexample per failed property

  bool passed() const { return normalized && monotone && submodular; }
};

inline constexpr std::size_t kDefaultAuditGuard = 16;

// Exhaustive audit. Refuses (GuardRefusal) rather than sampling when |S| is
// above the guard.
AuditReport audit_properties(const ValuationOracle& oracle,
                             std::size_t guard = kDefaultAuditGuard);

using ActionSet = std::vector<ElementSet>;

struct Instance {
  ValuationOracle oracle;
  std::vector<ActionSet> actions;  // X_i per agent

  std::size_t n() const { return actions.size(); }
};

// Validates that every X_i is nonempty and every action lies inside S.
Instance make_instance(ValuationOracle oracle, std::vector<ActionSet> actions);

}  // namespace infogreedy
