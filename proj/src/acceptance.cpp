#include "infogreedy/acceptance.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "infogreedy/bounds.hpp"
#include "infogreedy/design.hpp"
#include "infogreedy/errors.hpp"
#include "infogreedy/fixtures.hpp"
#include "infogreedy/generators.hpp"
#include "infogreedy/serialize.hpp"

namespace infogreedy {

namespace {

Json load_fixture(const AcceptanceOptions& o, const char* file, std::string_view embedded) {
  if (o.data_dir.empty()) return Json::parse(embedded);
  return read_json_file(o.data_dir / file);
}

// Collects failed expectations; the criterion passes iff none fail.
class Checker {
 public:
  template <typename T, typename U>
  void expect_eq(const std::string& what, const T& actual, const U& expected) {
    if (!(actual == expected)) fail(what + " = " + show(actual) + ", expected " + show(expected));
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }

  CriterionResult finish(int id, std::string name) const {
    CriterionResult r{id, std::move(name), failures_.empty(), {}};
    const auto& parts = failures_.empty() ? notes_ : failures_;
    for (std::size_t k = 0; k < parts.size(); ++k) r.detail += (k ? "; " : "") + parts[k];
    return r;
  }

 private:
  void fail(const std::string& s) { failures_.push_back(s); }
  static std::string show(const Rational& r) { return to_string(r); }
  template <typename T>
  static std::string show(const T& v) {
    std::ostringstream out;
    out << v;
    return out.str();
  }

  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

CriterionResult guarded(int id, const char* name, const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    return CriterionResult{id, name, false, std::string("error: ") + e.what()};
  }
  return c.finish(id, name);
}

std::string edges_text(const InfoGraph& g) { return graph_to_json(g).dump(); }

// Theorem 2 guarantee recomputed without the design module: scan r upward
// and size the cliques round-robin.
Rational independent_guarantee(std::size_t n, std::size_t m, std::size_t* r_out = nullptr,
                               DesignCase* tag_out = nullptr) {
  const std::size_t all = n * (n - 1) / 2;
  if (n >= 2 && m + 1 == all) {
    if (r_out) *r_out = 2;
    if (tag_out) *tag_out = DesignCase::clique_minus_edge;
    return Rational(1, 2);
  }
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<std::size_t> sizes(r, 0);
    for (std::size_t v = 0; v < n; ++v) ++sizes[v % r];
    std::size_t edges = 0;
    for (auto s : sizes) edges += s * (s - 1) / 2;
    if (edges <= m) {
      if (r_out) *r_out = r;
      if (tag_out) *tag_out = DesignCase::t_hat;
      return r == n ? Rational(1, static_cast<unsigned long>(n))
                    : Rational(1, static_cast<unsigned long>(r + 1));
    }
  }
  throw ConsistencyError("no design fits the budget");
}

}  // namespace

CriterionResult check_cover_example(const AcceptanceOptions& o) {
  return guarded(1, "four-agent weighted cover: optimum 9, full-information greedy 8, "
                    "graph greedy 6, efficiency 6/9",
                 [&](Checker& c) {
    const auto inst = instance_from_json(
        load_fixture(o, "four_agent_cover.json", fixtures::kFourAgentCoverInstance));
    const auto g = graph_from_json(
        load_fixture(o, "four_agent_cover_graph.json", fixtures::kFourAgentCoverGraph));
    const auto opt = brute_force_opt(inst);
    const auto full = run_generalized_greedy(inst, InfoGraph::complete(inst.n()));
    const auto eff = efficiency(inst, g);
    c.expect_eq("optimum", opt.value, Rational(9));
    c.expect_eq("complete-graph greedy", full.value, Rational(8));
    c.expect_eq("graph greedy", eff.sol_value, Rational(6));
    c.expect_eq("efficiency", eff.gamma, frac(6, 9));
    c.note("opt 9, full 8, graph 6, gamma " + to_string(eff.gamma));
  });
}

CriterionResult check_clique_minus_edge(const AcceptanceOptions& o) {
  return guarded(2, "K4 minus (3,4): alpha=k=2, omega=3, alpha*=k*=2, bounds [1/3, 1/2], "
                    "adversarial minimum 1/2",
                 [&](Checker& c) {
    const auto g = graph_from_json(
        load_fixture(o, "clique_minus_edge.json", fixtures::kCliqueMinusEdgeGraph));
    const auto a = analyze(g);
    const auto b = theorem1_bounds(g, a);
    c.expect_eq("alpha", a.exact.alpha, 2u);
    c.expect_eq("k", a.exact.clique_cover, 2u);
    c.expect_eq("omega", a.exact.omega, 3u);
    c.expect_eq("alpha*", a.fractional.alpha_star, Rational(2));
    c.expect_eq("k*", a.fractional.k_star, Rational(2));
    c.expect_eq("lower", b.lower, Rational(1, 3));
    c.expect_eq("upper", b.upper, Rational(1, 2));
    const auto s = adversarial_search(g, SearchBudget{}, o.seed);
    c.expect(s.exhaustive_family_run, "tiny weighted-cover family was not searched");
    c.expect_eq("adversarial minimum", s.min_gamma, Rational(1, 2));
    c.note("min over " + std::to_string(s.instances_evaluated) + " instances = " +
           to_string(s.min_gamma));
  });
}

CriterionResult check_five_cycle(const AcceptanceOptions& o) {
  return guarded(3, "five-cycle: alpha=2, k=3, alpha*=k*=5/2 at z=(1/2,..,1/2), "
                    "sibling witness w=3",
                 [&](Checker& c) {
    const auto g = graph_from_json(load_fixture(o, "five_cycle.json", fixtures::kFiveCycleGraph));
    const auto a = analyze(g);
    c.expect_eq("alpha", a.exact.alpha, 2u);
    c.expect_eq("k", a.exact.clique_cover, 3u);
    c.expect_eq("alpha*", a.fractional.alpha_star, Rational(5, 2));
    c.expect_eq("k*", a.fractional.k_star, Rational(5, 2));
    for (std::size_t i = 0; i < a.fractional.z.size(); ++i)
      c.expect_eq("z_" + std::to_string(i + 1), a.fractional.z[i], Rational(1, 2));
    c.expect(a.sibling.has_property, "sibling property absent");
    bool found = false;
    for (const auto& w : a.sibling.witnesses)
      found |= w.independent_set == VertexSet::of({1, 3}) && w.observer == 2 && w.observed == 1;
    c.expect(found, "no witness with J={2, 4}, w=3, i=2");
    c.note("alpha 2, k 3, alpha* 5/2, witness J={2, 4} w=3");
  });
}

CriterionResult check_three_agent_tie(const AcceptanceOptions& o) {
  return guarded(4, "three-agent tie instance: optimum 3, worst greedy 1, efficiency 1/3 "
                    "= 1/(alpha*+1)",
                 [&](Checker& c) {
    const auto inst = instance_from_json(
        load_fixture(o, "three_agent_tie.json", fixtures::kThreeAgentTieInstance));
    const auto g = graph_from_json(
        load_fixture(o, "three_agent_tie_graph.json", fixtures::kThreeAgentTieGraph));
    const auto eff = efficiency(inst, g);
    const Rational lower = 1 / (alpha_star(g) + 1);
    c.expect_eq("optimum", eff.opt_value, Rational(3));
    c.expect_eq("worst greedy", eff.sol_value, Rational(1));
    c.expect_eq("efficiency", eff.gamma, Rational(1, 3));
    c.expect_eq("1/(alpha*+1)", lower, Rational(1, 3));
    const auto sib = sibling_lower_instance(g);
    c.expect_eq("sibling construction", sib.realized_gamma, Rational(1, 3));
    c.note("opt 3, worst 1, gamma 1/3; sibling construction also 1/3");
  });
}

CriterionResult check_efficiency_bounds(const AcceptanceOptions& o) {
  return guarded(5, "random graphs and cover instances: efficiency >= 1/(alpha*+1); "
                    "canonical construction realizes 1/alpha*",
                 [&](Checker& c) {
    Rng rng(o.seed);
    std::map<std::pair<std::size_t, std::uint64_t>, Rational> alpha_cache;
    std::set<std::pair<std::size_t, std::string>> canonical_seen;
    std::size_t lower_violations = 0;
    std::size_t shortfalls = 0;
    std::string first_lower;
    std::string first_shortfall;
    for (std::size_t k = 0; k < o.random_pairs; ++k) {
      const std::size_t n = 1 + rng() % 6;
      const auto g = random_graph(n, rng);
      const auto inst = random_wsc_instance(n, WscShape{}, rng);
      const auto key = edges_text(g);
      const auto fr = fractional_numbers(g);
      const auto gamma = efficiency(inst, g).gamma;
      if (gamma < 1 / (fr.alpha_star + 1)) {
        if (lower_violations++ == 0)
          first_lower = key + " gamma " + to_string(gamma) + " alpha* " + to_string(fr.alpha_star);
      }
      if (canonical_seen.emplace(n, key).second) {
        const auto wc = canonical_upper_instance(g);
        if (wc.realized_gamma != 1 / fr.alpha_star) {
          if (shortfalls++ == 0)
            first_shortfall = key + " realizes " + to_string(wc.realized_gamma) +
                              ", 1/alpha* = " + to_string(1 / fr.alpha_star);
        }
      }
    }
    c.expect(lower_violations == 0, std::to_string(lower_violations) +
                                        " lower-bound violations (first: " + first_lower + ")");
    c.expect(shortfalls == 0, "canonical construction misses 1/alpha* on " +
                                  std::to_string(shortfalls) + " of " +
                                  std::to_string(canonical_seen.size()) +
                                  " distinct graphs (first: " + first_shortfall + ")");
    c.note(std::to_string(o.random_pairs) + " pairs, " + std::to_string(canonical_seen.size()) +
           " distinct graphs, 0 violations");
  });
}

CriterionResult check_full_information_floor(const AcceptanceOptions& o) {
  return guarded(6, "complete-graph greedy on audited random instances never below 1/2",
                 [&](Checker& c) {
    Rng rng(o.seed + 6);
    std::size_t violations = 0;
    Rational worst(1);
    for (std::size_t k = 0; k < o.random_pairs; ++k) {
      const std::size_t n = 1 + rng() % 6;
      const auto inst = k % 3 == 2 ? random_vta_instance(n, 10, rng)
                                   : random_wsc_instance(n, WscShape{}, rng);
      const auto audit = audit_properties(inst.oracle);
      c.expect(audit.passed(), "instance " + std::to_string(k) + " failed its property audit");
      const auto gamma = efficiency(inst, InfoGraph::complete(n)).gamma;
      if (gamma < Rational(1, 2)) ++violations;
      if (gamma < worst) worst = gamma;
    }
    c.expect(violations == 0, std::to_string(violations) + " instances below 1/2");
    c.note(std::to_string(o.random_pairs) + " instances, minimum efficiency " + to_string(worst));
  });
}

CriterionResult check_duality(const AcceptanceOptions&) {
  return guarded(7, "alpha <= alpha* = k* <= k on every graph with n <= 6 (up to isomorphism)",
                 [&](Checker& c) {
    std::size_t classes = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      std::set<std::uint64_t> seen;
      for (std::uint64_t code = 0; code < graph_count(n); ++code) {
        const auto g = graph_from_code(n, code);
        if (!seen.insert(canonical_code(g)).second) continue;
        const auto ex = exact_numbers(g);
        const auto fr = fractional_numbers(g);
        const auto label = "n=" + std::to_string(n) + " " + edges_text(g);
        c.expect(fr.alpha_star == fr.k_star, label + ": alpha* != k*");
        c.expect(Rational(static_cast<long>(ex.alpha)) <= fr.alpha_star, label + ": alpha > alpha*");
        c.expect(fr.k_star <= Rational(static_cast<long>(ex.clique_cover)), label + ": k* > k");
      }
      classes += seen.size();
    }
    c.note(std::to_string(classes) + " isomorphism classes checked");
  });
}

CriterionResult check_turan_edge_counts(const AcceptanceOptions&) {
  return guarded(8, "closed-form edge count equals constructed complement Turan graphs, "
                    "1 <= r <= n <= 30",
                 [&](Checker& c) {
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 30; ++n)
      for (std::size_t r = 1; r <= n; ++r, ++pairs)
        c.expect_eq("M(" + std::to_string(n) + "," + std::to_string(r) + ")",
                    edge_count_M(n, r), complement_turan(n, r).graph.edge_count());
    c.note(std::to_string(pairs) + " (n, r) pairs");
  });
}

CriterionResult check_design_curve(const AcceptanceOptions&) {
  return guarded(9, "ten-agent design curve: 1/4 on m in [12,19], 1/3 at 20, 1/2 at 44 and 45, "
                    "matches an independent recomputation",
                 [&](Checker& c) {
    const auto curve = efficiency_curve(10);
    c.expect_eq("curve length", curve.size(), 46u);
    for (std::size_t m = 12; m <= 19; ++m)
      c.expect_eq("gamma(" + std::to_string(m) + ")", curve[m].gamma, Rational(1, 4));
    c.expect_eq("gamma(20)", curve[20].gamma, Rational(1, 3));
    c.expect_eq("gamma(44)", curve[44].gamma, Rational(1, 2));
    c.expect_eq("gamma(45)", curve[45].gamma, Rational(1, 2));
    std::set<std::size_t> breakpoints{44};
    for (std::size_t r = 1; r <= 10; ++r) breakpoints.insert(edge_count_M(10, r));
    std::size_t jumps = 0;
    for (std::size_t m = 1; m < curve.size(); ++m) {
      c.expect(curve[m].gamma >= curve[m - 1].gamma, "curve decreases at m=" + std::to_string(m));
      if (curve[m].gamma != curve[m - 1].gamma) {
        ++jumps;
        c.expect(breakpoints.count(m) == 1, "unexpected jump at m=" + std::to_string(m));
      }
    }
    for (const auto& p : curve) {
      std::size_t r = 0;
      DesignCase tag{};
      const auto expected = independent_guarantee(10, p.m, &r, &tag);
      c.expect(p == CurvePoint{p.m, expected, r, tag},
               "curve point m=" + std::to_string(p.m) + " disagrees with recomputation");
    }
    c.note(std::to_string(jumps) + " jumps, all at clique-partition edge counts or m=44");
  });
}

CriterionResult check_design_optimality(const AcceptanceOptions& o) {
  return guarded(10, "no graph with n <= 5 and at most m edges has a certified efficiency above "
                     "the designed guarantee",
                 [&](Checker& c) {
    std::size_t graphs = 0;
    std::size_t searched = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      const std::size_t all = n * (n - 1) / 2;
      std::vector<Rational> guarantee(all + 1);
      for (std::size_t m = 0; m <= all; ++m) guarantee[m] = optimal_structure(n, m).gamma_guaranteed;
      for (std::uint64_t code = 0; code < graph_count(n); ++code, ++graphs) {
        const auto g = graph_from_code(n, code);
        const auto e = g.edge_count();
        Rational certified = canonical_upper_instance(g).realized_gamma;
        if (sibling_property(g).has_property)
          certified = std::min(certified, sibling_lower_instance(g).realized_gamma);
        if (certified > guarantee[e]) {
          ++searched;
          certified = std::min(certified, adversarial_search(g, SearchBudget{}, o.seed).min_gamma);
        }
        for (std::size_t m = e; m <= all; ++m)
          c.expect(certified <= guarantee[m],
                   "n=" + std::to_string(n) + " " + edges_text(g) + " certified only down to " +
                       to_string(certified) + " > design " + to_string(guarantee[m]) +
                       " at m=" + std::to_string(m));
      }
    }
    c.note(std::to_string(graphs) + " graphs, " + std::to_string(searched) +
           " needed adversarial search");
  });
}

CriterionResult check_no_sibling_minimum(const AcceptanceOptions&) {
  return guarded(11, "fewest-edge graphs without the sibling property: witness size, "
                     "independence number, and exhaustive minimality for n <= 6",
                 [&](Checker& c) {
    auto formula = [](std::size_t n, std::size_t r) {
      const std::size_t rest = n - r;
      return (rest >= r - 1 ? edge_count_M(rest, r - 1) : 0) + 2 * rest;
    };
    std::size_t witnesses = 0;
    for (std::size_t n = 3; n <= 10; ++n)
      for (std::size_t r = 2; r < n; ++r, ++witnesses) {
        const auto w = min_edges_no_sibling(n, r);
        const auto label = "(" + std::to_string(n) + "," + std::to_string(r) + ")";
        c.expect_eq("m_min" + label, w.m_min, formula(n, r));
        c.expect_eq("witness edges" + label, w.graph.edge_count(), formula(n, r));
        c.expect_eq("alpha" + label, exact_numbers(w.graph).alpha, r);
        c.expect(!sibling_property(w.graph).has_property, "witness" + label + " has the property");
      }
    std::size_t checked = 0;
    for (std::size_t n = 3; n <= 6; ++n)
      for (std::uint64_t code = 0; code < graph_count(n); ++code) {
        const auto g = graph_from_code(n, code);
        const auto alpha = exact_numbers(g).alpha;
        if (alpha < 2 || alpha >= n || sibling_property(g).has_property) continue;
        ++checked;
        c.expect(g.edge_count() >= formula(n, alpha),
                 "n=" + std::to_string(n) + " " + edges_text(g) + " lacks the property with only " +
                     std::to_string(g.edge_count()) + " edges");
      }
    c.note(std::to_string(witnesses) + " witnesses; " + std::to_string(checked) +
           " graphs without the property checked for minimality");
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o) {
  return {check_cover_example(o),        check_clique_minus_edge(o),
          check_five_cycle(o),           check_three_agent_tie(o),
          check_efficiency_bounds(o),    check_full_information_floor(o),
          check_duality(o),              check_turan_edge_counts(o),
          check_design_curve(o),         check_design_optimality(o),
          check_no_sibling_minimum(o)};
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " AC" + std::to_string(r.id) + " " + r.name +
         ": " + r.detail;
}

}  // namespace infogreedy
