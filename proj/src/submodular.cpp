#include "infogreedy/submodular.hpp"

#include <algorithm>
#include <utility>

#include "infogreedy/errors.hpp"

namespace infogreedy {

namespace {

void require_nonnegative(const std::vector<Rational>& values, const char* what) {
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k] < 0)
      throw InputError(std::string(what) + "[" + std::to_string(k) + "] = " +
                       to_string(values[k]) + " is negative");
}

const Rational kOne(1);

}  // namespace

ValuationOracle::ValuationOracle(std::size_t ground_size, ValueFn value_fn,
                                 OracleDescription description)
    : ground_size_(ground_size),
      value_fn_(std::make_shared<const ValueFn>(std::move(value_fn))),
      description_(std::move(description)) {
  if (ground_size > kMaxElements)
    throw InputError("ground set of " + std::to_string(ground_size) + " elements exceeds " +
                     std::to_string(kMaxElements));
  for (std::size_t e = 0; e < ground_size; ++e) ground_.insert(e);
}

Rational ValuationOracle::evaluate(const ElementSet& subset) const {
  if (!subset.is_subset_of(ground_)) {
    const auto extent = subset.extent();
    throw InputError("element id " + std::to_string(extent - 1) + " is outside the ground set of " +
                     std::to_string(ground_size_) + " elements");
  }
  return (*value_fn_)(subset);
}

Rational evaluate(const ValuationOracle& oracle, const ElementSet& subset) {
  return oracle.evaluate(subset);
}

Rational marginal(const ValuationOracle& oracle, const ElementSet& action, const ElementSet& base) {
  return oracle.evaluate(action | base) - oracle.evaluate(base);
}

ValuationOracle build_wsc(const WeightedSetCoverSpec& spec) {
  require_nonnegative(spec.target_values, "values");
  auto values = spec.target_values;
  const auto size = values.size();
  return ValuationOracle(
      size,
      [values = std::move(values)](const ElementSet& a) -> Rational {
        Rational total;
        for (std::size_t t = 0; t < values.size(); ++t)
          if (a.contains(t)) total += values[t];
        return total;
      },
      spec);
}

std::size_t vta_element(const TargetAssignmentSpec& spec, std::size_t agent, std::size_t target) {
  return agent * spec.target_values.size() + target;
}

ValuationOracle build_vta(const TargetAssignmentSpec& spec) {
  require_nonnegative(spec.target_values, "values");
  for (std::size_t i = 0; i < spec.success_probs.size(); ++i)
    if (spec.success_probs[i] < 0 || spec.success_probs[i] > 1)
      throw InputError("probs[" + std::to_string(i) + "] = " + to_string(spec.success_probs[i]) +
                       " is outside [0, 1]");
  const auto targets = spec.target_values.size();
  const auto agents = spec.success_probs.size();
  auto values = spec.target_values;
  auto probs = spec.success_probs;
  return ValuationOracle(
      agents * targets,
      [values = std::move(values), probs = std::move(probs), targets](const ElementSet& a) -> Rational {
        Rational total;
        for (std::size_t t = 0; t < targets; ++t) {
          Rational miss(1);
          bool covered = false;
          for (std::size_t i = 0; i < probs.size(); ++i) {
            if (a.contains(i * targets + t)) {
              covered = true;
              miss *= 1 - probs[i];
            }
          }
          if (covered) total += values[t] * (1 - miss);
        }
        return total;
      },
      spec);
}

ValuationOracle build_capped_sum(const CappedSumSpec& spec) {
  require_nonnegative(spec.weights, "weights");
  auto weights = spec.weights;
  const auto n = weights.size();
  return ValuationOracle(
      2 * n,
      [weights = std::move(weights), n](const ElementSet& a) -> Rational {
        Rational u_part;
        Rational v_part;
        for (std::size_t i = 0; i < n; ++i) {
          if (a.contains(i)) u_part += weights[i];
          if (a.contains(n + i)) v_part += weights[i];
        }
        return std::min(u_part, kOne) + v_part;
      },
      spec);
}

ValuationOracle build_capped_sum(const CappedSumSpec& spec, const InfoGraph& g) {
  if (spec.weights.size() != g.n())
    throw InputError("capped sum has " + std::to_string(spec.weights.size()) +
                     " weights for a graph on " + std::to_string(g.n()) + " agents");
  for (auto c : maximal_cliques(g)) {
    Rational total;
    for (auto v : c.members()) total += spec.weights[v];
    if (total > 1)
      throw InputError("clique " + format_agents(c) + " carries weight " + to_string(total) +
                       " > 1");
  }
  return build_capped_sum(spec);
}

std::vector<Rational> coverage_weights(const CappedCoverageSpec& spec) {
  std::vector<Rational> w(spec.agents);
  for (const auto& atom : spec.atoms)
    for (auto i : atom.agents.members()) w[i] += atom.measure;
  return w;
}

ValuationOracle build_capped_coverage(const CappedCoverageSpec& spec) {
  for (std::size_t k = 0; k < spec.atoms.size(); ++k) {
    const auto& atom = spec.atoms[k];
    if (atom.measure < 0)
      throw InputError("atoms[" + std::to_string(k) + "] has negative measure");
    if (atom.agents.empty() || !atom.agents.is_subset_of(VertexSet::range(0, spec.agents)))
      throw InputError("atoms[" + std::to_string(k) + "] names agents outside 0.." +
                       std::to_string(spec.agents));
  }
  const auto n = spec.agents;
  auto weights = coverage_weights(spec);
  auto atoms = spec.atoms;
  return ValuationOracle(
      2 * n,
      [weights = std::move(weights), atoms = std::move(atoms), n](const ElementSet& a) -> Rational {
        VertexSet chosen_u;
        Rational v_part;
        for (std::size_t i = 0; i < n; ++i) {
          if (a.contains(i)) chosen_u.insert(i);
          if (a.contains(n + i)) v_part += weights[i];
        }
        Rational covered;
        for (const auto& atom : atoms)
          if (!(atom.agents & chosen_u).empty()) covered += atom.measure;
        return std::min(covered, kOne) + v_part;
      },
      spec);
}

ValuationOracle make_custom_oracle(std::size_t ground_size, ValuationOracle::ValueFn fn,
                                   std::string label) {
  return ValuationOracle(ground_size, std::move(fn), CustomOracle{std::move(label)});
}

AuditReport audit_properties(const ValuationOracle& oracle, std::size_t guard) {
  const auto size = oracle.ground_size();
  if (size > guard || size >= 63)
    throw GuardRefusal("exhaustive property audit refused", guard, size);
  const std::uint64_t count = std::uint64_t{1} << size;
  std::vector<Rational> table(count);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    table[mask] = oracle.evaluate(ElementSet::from_mask(mask));

  AuditReport report;
  if (table[0] != 0) {
    report.normalized = false;
    report.witnesses.push_back({Property::normalized, {}, {}, std::nullopt});
  }
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t y = 0; y < size; ++y) {
      const auto ybit = std::uint64_t{1} << y;
      if (mask & ybit) continue;
      if (report.monotone && table[mask] > table[mask | ybit]) {
        report.monotone = false;
        report.witnesses.push_back({Property::monotone, ElementSet::from_mask(mask),
                                    ElementSet::from_mask(mask | ybit), y});
      }
      if (!report.submodular) continue;
      for (std::size_t x = y + 1; x < size; ++x) {
        const auto xbit = std::uint64_t{1} << x;
        if (mask & xbit) continue;
        const Rational small_gain = table[mask | xbit] - table[mask];
        const Rational large_gain = table[mask | xbit | ybit] - table[mask | ybit];
        if (small_gain < large_gain) {
          report.submodular = false;
          report.witnesses.push_back({Property::submodular, ElementSet::from_mask(mask),
                                      ElementSet::from_mask(mask | ybit), x});
          break;
        }
      }
    }
    if (!report.monotone && !report.submodular) break;
  }
  return report;
}

Instance make_instance(ValuationOracle oracle, std::vector<ActionSet> actions) {
  if (actions.empty()) throw InputError("instance has no agents");
  ElementSet ground;
  for (std::size_t e = 0; e < oracle.ground_size(); ++e) ground.insert(e);
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (actions[i].empty())
      throw InputError("agent " + std::to_string(i + 1) + " has an empty action set");
    for (std::size_t k = 0; k < actions[i].size(); ++k)
      if (!actions[i][k].is_subset_of(ground))
        throw InputError("agent " + std::to_string(i + 1) + " action " + std::to_string(k) +
                         " uses an element outside the ground set");
  }
  return Instance{std::move(oracle), std::move(actions)};
}

}  // namespace infogreedy
