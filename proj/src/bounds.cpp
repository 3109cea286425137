#include "infogreedy/bounds.hpp"

#include <algorithm>
#include <random>

#include "infogreedy/errors.hpp"

namespace infogreedy {

namespace {

// The coverage fallback enumerates independent sets and zero-weight vertex
// sets, both exponential in n.
constexpr std::size_t kCoverageFallbackGuard = 8;

Instance capped_instance(ValuationOracle oracle, std::size_t n) {
  std::vector<ActionSet> actions(n);
  for (std::size_t i = 0; i < n; ++i) actions[i] = {ElementSet{i}, ElementSet{n + i}};
  return make_instance(std::move(oracle), std::move(actions));
}

bool literal_cap_respects_observers(const InfoGraph& g, const std::vector<Rational>& z) {
  for (std::size_t i = 0; i < g.n(); ++i) {
    if (z[i] == 0) continue;
    Rational closed = z[i];
    for (auto j : g.in_neighbors(i).members()) closed += z[j];
    if (closed > 1) return false;
  }
  return true;
}

// Truncated coverage over independent-set atoms. Each agent outside `zero`
// has closed in-neighbourhood coverage at most 1, so an agent that sees only
// u-choices is indifferent between u_i and v_i.
std::optional<std::pair<CappedCoverageSpec, Rational>> coverage_for(const InfoGraph& g,
                                                                    VertexSet zero) {
  const std::size_t n = g.n();
  std::vector<VertexSet> atoms;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    VertexSet s(mask);
    if ((s & zero).empty() && g.is_independent(s)) atoms.push_back(s);
  }
  if (atoms.empty()) return std::nullopt;

  LinearProgram lp;
  lp.sense = Sense::maximize;
  for (const auto& a : atoms) lp.objective.emplace_back(static_cast<long>(a.size()));
  for (std::size_t i = 0; i < n; ++i) {
    if (zero.contains(i)) continue;
    const VertexSet closed = g.in_neighbors(i) | VertexSet::of({i});
    std::vector<Rational> row(atoms.size());
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (!(atoms[k] & closed).empty()) row[k] = 1;
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(1);
  }
  const auto sol = solve_lp(lp);

  CappedCoverageSpec spec;
  spec.agents = n;
  Rational total;
  for (std::size_t k = 0; k < atoms.size(); ++k)
    if (sol.point[k] > 0) {
      spec.atoms.push_back({atoms[k], sol.point[k]});
      total += sol.point[k];
    }
  if (total == 0) return std::nullopt;
  const Rational gamma = std::min(total, Rational(1)) / sol.optimum;
  return std::make_pair(std::move(spec), gamma);
}

CappedCoverageSpec best_coverage(const InfoGraph& g) {
  if (g.n() > kCoverageFallbackGuard)
    throw GuardRefusal("coverage construction refused", kCoverageFallbackGuard, g.n());
  std::optional<std::pair<CappedCoverageSpec, Rational>> best;
  const std::uint64_t count = std::uint64_t{1} << g.n();
  for (std::uint64_t mask = 0; mask + 1 < count; ++mask) {
    auto candidate = coverage_for(g, VertexSet(mask));
    if (candidate && (!best || candidate->second < best->second)) best = std::move(candidate);
  }
  if (!best) throw ConsistencyError("coverage construction found no feasible atoms");
  return best->first;
}

WorstCaseInstance certify(Instance inst, const InfoGraph& g, Construction c, Rational predicted) {
  WorstCaseInstance out{std::move(inst), c, std::move(predicted), Rational(0)};
  out.realized_gamma = efficiency(out.instance, g).gamma;
  return out;
}

std::vector<ElementSet> singleton_family(std::size_t code) {
  // Six families of singleton actions over three targets.
  static const std::vector<std::vector<std::size_t>> kFamilies = {
      {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
  std::vector<ElementSet> out;
  for (auto t : kFamilies[code]) out.push_back(ElementSet{t});
  return out;
}

}  // namespace

GraphAnalysis analyze(const InfoGraph& g, std::size_t guard) {
  GraphAnalysis a;
  a.exact = exact_numbers(g, guard);
  a.fractional = fractional_numbers(g);
  a.sibling = sibling_property(g, guard);
  if (Rational(static_cast<long>(a.exact.alpha)) > a.fractional.alpha_star ||
      a.fractional.k_star > Rational(static_cast<long>(a.exact.clique_cover)))
    throw ConsistencyError("alpha <= alpha* = k* <= k fails on this graph");
  return a;
}

bool is_clique_minus_last_edge(const InfoGraph& g) {
  const auto n = g.n();
  if (n < 2 || g.edge_count() + 1 != n * (n - 1) / 2) return false;
  return !g.has_edge(n - 2, n - 1);
}

BoundsReport theorem1_bounds(const InfoGraph& g) { return theorem1_bounds(g, analyze(g)); }

BoundsReport theorem1_bounds(const InfoGraph& g, const GraphAnalysis& a) {
  BoundsReport r;
  r.alpha_star = a.fractional.alpha_star;
  r.lower = 1 / (r.alpha_star + 1);
  r.upper = 1 / r.alpha_star;
  const Rational alpha(static_cast<long>(a.exact.alpha));
  if (a.sibling.has_property) {
    r.sibling_upper = 1 / (1 + alpha);
    r.lower_tight = alpha == r.alpha_star;
  }
  r.upper_tight = g.n() == 1 || g.edge_count() == 0 || is_clique_minus_last_edge(g);
  return r;
}

const char* to_string(Construction c) {
  switch (c) {
    case Construction::canonical_upper: return "canonical_upper";
    case Construction::sibling_lower: return "sibling_lower";
    case Construction::handcrafted: return "handcrafted";
  }
  return "?";
}

WorstCaseInstance canonical_upper_instance(const InfoGraph& g) {
  if (g.n() == 0) throw InputError("graph has no agents");
  const auto fr = fractional_numbers(g);
  Rational sum;
  for (const auto& v : fr.z) sum += v;
  if (sum == 0) throw ConsistencyError("fractional independence point sums to 0");

  auto oracle = literal_cap_respects_observers(g, fr.z)
                    ? build_capped_sum(CappedSumSpec{fr.z}, g)
                    : build_capped_coverage(best_coverage(g));
  return certify(capped_instance(std::move(oracle), g.n()), g, Construction::canonical_upper,
                 1 / fr.alpha_star);
}

WorstCaseInstance sibling_lower_instance(const InfoGraph& g) {
  const auto verdict = sibling_property(g);
  if (!verdict.has_property) throw InputError("graph lacks the Sibling Property");
  const auto& wit = verdict.primary();
  const auto n = g.n();
  const auto w = wit.observer;
  const auto& J = wit.independent_set;

  WeightedSetCoverSpec spec;
  spec.target_values.assign(wit.clean ? n : n + 1, Rational(0));
  for (auto i : J.members()) spec.target_values[i] = 1;
  spec.target_values[w] = 1;

  std::vector<ActionSet> actions(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (J.contains(i))
      actions[i] = {ElementSet{w}, ElementSet{i}};
    else if (i == w)
      actions[i] = wit.clean ? ActionSet{ElementSet{w}} : ActionSet{ElementSet{w}, ElementSet{n}};
    else
      actions[i] = {ElementSet{i}};
  }
  auto inst = make_instance(build_wsc(spec), std::move(actions));
  return certify(std::move(inst), g, Construction::sibling_lower,
                 1 / Rational(static_cast<long>(J.size() + 1)));
}

SearchResult adversarial_search(const InfoGraph& g, const SearchBudget& budget,
                                std::uint64_t seed) {
  const auto n = g.n();
  if (n == 0) throw InputError("graph has no agents");
  const Rational floor = 1 / (alpha_star(g) + 1);

  std::optional<SearchResult> best;
  std::uint64_t evaluated = 0;
  auto consider = [&](WorstCaseInstance wc) {
    ++evaluated;
    if (wc.realized_gamma < floor)
      throw ConsistencyError("instance realizes efficiency " + to_string(wc.realized_gamma) +
                             " below the lower bound " + to_string(floor));
    if (!best || wc.realized_gamma < best->min_gamma)
      best = SearchResult{wc.realized_gamma, std::move(wc), 0, false};
  };
  auto consider_wsc = [&](Instance inst) {
    const auto opt = brute_force_opt(inst);
    if (opt.value == 0) return;
    const auto greedy = run_generalized_greedy(inst, g);
    Rational gamma = greedy.value / opt.value;
    consider(WorstCaseInstance{std::move(inst), Construction::handcrafted, gamma, gamma});
  };

  try {
    consider(canonical_upper_instance(g));
  } catch (const GuardRefusal&) {
  }
  if (sibling_property(g).has_property) consider(sibling_lower_instance(g));

  bool exhaustive = false;
  std::uint64_t family = 63;  // nonzero value vectors over three targets
  for (std::size_t i = 0; i < n && family <= budget.exhaustive_limit; ++i) family *= 6;
  if (family <= budget.exhaustive_limit) {
    exhaustive = true;
    std::vector<std::size_t> codes(n, 0);
    for (int values = 1; values < 64; ++values) {
      const auto oracle = build_wsc({{Rational(values & 3), Rational((values >> 2) & 3),
                                      Rational((values >> 4) & 3)}});
      std::fill(codes.begin(), codes.end(), 0);
      for (;;) {
        std::vector<ActionSet> actions(n);
        for (std::size_t i = 0; i < n; ++i) actions[i] = singleton_family(codes[i]);
        consider_wsc(make_instance(oracle, std::move(actions)));
        std::size_t pos = 0;
        while (pos < n && ++codes[pos] == 6) codes[pos++] = 0;
        if (pos == n) break;
      }
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < budget.random_samples; ++s) {
    const std::size_t targets = 1 + rng() % (n + 2);
    WeightedSetCoverSpec spec;
    for (std::size_t t = 0; t < targets; ++t) spec.target_values.emplace_back(static_cast<long>(rng() % 4));
    std::vector<ActionSet> actions(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t size = 1 + rng() % 3;
      for (std::size_t k = 0; k < size; ++k) {
        ElementSet a{static_cast<std::size_t>(rng() % targets)};
        if (targets > 1 && rng() % 3 == 0) a.insert(rng() % targets);
        actions[i].push_back(a);
      }
    }
    consider_wsc(make_instance(build_wsc(spec), std::move(actions)));
  }

  if (!best) throw ConsistencyError("adversarial search evaluated no instance");
  best->instances_evaluated = evaluated;
  best->exhaustive_family_run = exhaustive;
  return std::move(*best);
}

}  // namespace infogreedy
