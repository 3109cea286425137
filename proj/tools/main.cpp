#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "infogreedy/acceptance.hpp"
#include "infogreedy/bounds.hpp"
#include "infogreedy/design.hpp"
#include "infogreedy/errors.hpp"
#include "infogreedy/serialize.hpp"

namespace fs = std::filesystem;
using namespace infogreedy;

namespace {

enum Exit { kOk = 0, kInput = 2, kGuard = 3, kConsistency = 4, kIo = 5 };

struct Common {
  std::string format = "table";
  std::string out;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty())
    std::cout << text;
  else
    write_text_file(c.out, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join_agents(VertexSet s) { return format_agents(s); }

Json ids_json(const ElementSet& s) {
  Json out = Json::array();
  for (auto id : s.ids()) out.push_back(id);
  return out;
}

std::string action_text(const Json& ids) {
  std::string s = "{";
  for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + ids[k].dump();
  return s + "}";
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (f == a) return;
  throw InputError("format '" + f + "' is not available for this command");
}

int cmd_analyze(const Common& c, const std::string& graph_path) {
  require_format(c.format, {"table", "json", "dot"});
  const auto g = graph_from_json(read_json_file(graph_path));
  if (c.format == "dot") {
    emit(c, graph_to_dot(g));
    return kOk;
  }
  const auto a = analyze(g);
  const auto b = theorem1_bounds(g, a);
  if (c.format == "json") {
    Json j = to_json(a, b);
    j["graph"] = graph_to_json(g);
    emit(c, dump(j));
    return kOk;
  }
  std::ostringstream out;
  out << "agents " << g.n() << ", edges " << g.edge_count() << '\n';
  out << "alpha = " << a.exact.alpha << ", k = " << a.exact.clique_cover
      << ", omega = " << a.exact.omega << '\n';
  out << "alpha* = " << to_string(a.fractional.alpha_star)
      << ", k* = " << to_string(a.fractional.k_star) << '\n';
  out << "LP point z = (";
  for (std::size_t i = 0; i < a.fractional.z.size(); ++i)
    out << (i ? ", " : "") << to_string(a.fractional.z[i]);
  out << ")\nmaximal cliques:";
  for (auto s : a.fractional.cliques) out << ' ' << join_agents(s);
  out << "\nmaximum independent sets:";
  for (auto s : a.exact.max_independent_sets) out << ' ' << join_agents(s);
  out << "\nminimum clique cover:";
  for (auto s : a.exact.min_clique_cover) out << ' ' << join_agents(s);
  out << "\nsibling = " << (a.sibling.has_property ? "true" : "false");
  if (a.sibling.has_property) {
    const auto& w = a.sibling.primary();
    out << " (J = " << join_agents(w.independent_set) << ", w = " << w.observer + 1
        << ", i = " << w.observed + 1 << ')';
  }
  out << "\nbounds [" << to_string(b.lower) << ", " << to_string(b.upper) << "]";
  if (b.sibling_upper) out << ", sibling upper " << to_string(*b.sibling_upper);
  if (b.lower_tight) out << ", lower bound attained";
  if (b.upper_tight) out << ", efficiency equals the upper bound";
  out << '\n';
  emit(c, out.str());
  return kOk;
}

TiePolicy parse_tie(const std::string& tie, std::uint64_t seed) {
  if (tie == "worst") return TiePolicy::worst();
  if (tie == "first") return TiePolicy::first();
  if (tie == "random") return TiePolicy::random(seed);
  throw InputError("unknown tie policy '" + tie + "'");
}

int cmd_solve(const Common& c, const std::string& inst_path, const std::string& graph_path,
              const std::string& tie, std::uint64_t seed, std::uint64_t budget, bool trace) {
  require_format(c.format, {"table", "json"});
  const auto inst = instance_from_json(read_json_file(inst_path));
  const auto g = graph_from_json(read_json_file(graph_path));
  const auto policy = parse_tie(tie, seed);
  const auto opt = brute_force_opt(inst);
  if (opt.value == 0) throw InputError("degenerate instance: the optimum is 0, efficiency undefined");
  const auto full = run_generalized_greedy(inst, InfoGraph::complete(inst.n()), policy, budget);
  const auto local = run_generalized_greedy(inst, g, policy, budget);
  const Rational gamma = local.value / opt.value;

  Json opt_json = to_json(EfficiencyReport{gamma, opt.value, local.value, opt.profile, local}, inst, trace);
  if (c.format == "json") {
    Json j{{"tie", to_string(policy.rule)}, {"seed", seed}};
    j["efficiency"] = opt_json;
    j["complete_graph"] = to_json(full, inst, trace);
    emit(c, dump(j));
    return kOk;
  }
  std::ostringstream out;
  out << "# tie " << to_string(policy.rule) << ", seed " << seed << '\n';
  const auto width = 12;
  out << std::left << std::setw(34) << "";
  for (std::size_t i = 0; i < inst.n(); ++i) out << std::setw(width) << "x" + std::to_string(i + 1);
  out << "f\n";
  auto row = [&](const std::string& name, const Json& profile, const Rational& value) {
    out << std::setw(34) << name;
    for (const auto& a : profile) out << std::setw(width) << action_text(a);
    out << to_string(value) << '\n';
  };
  row("optimal", opt_json["opt_profile"], opt.value);
  row("greedy, complete graph", to_json(full, inst, false)["profile"], full.value);
  row("greedy, given graph", to_json(local, inst, false)["profile"], local.value);
  out << "efficiency " << to_string(gamma) << " (branches explored " << local.branches_explored
      << ")\n";
  if (trace) {
    for (const auto& s : local.trace) {
      out << "agent " << s.agent + 1 << " sees " << action_text(ids_json(s.observed))
          << " marginals";
      for (const auto& m : s.marginals) out << ' ' << to_string(m);
      out << " argmax";
      for (auto k : s.argmax) out << ' ' << k;
      out << " chose " << s.chosen << '\n';
    }
  }
  emit(c, out.str());
  return kOk;
}

int cmd_worst_case(const Common& c, const std::string& graph_path, const std::string& out_dir,
                   bool search, std::uint64_t seed, std::uint64_t samples) {
  require_format(c.format, {"table", "json"});
  const auto g = graph_from_json(read_json_file(graph_path));
  std::vector<WorstCaseInstance> built{canonical_upper_instance(g)};
  if (sibling_property(g).has_property) built.push_back(sibling_lower_instance(g));
  std::optional<SearchResult> found;
  if (search) found = adversarial_search(g, SearchBudget{SearchBudget{}.exhaustive_limit, samples}, seed);

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const auto& w : built)
      write_text_file(fs::path(out_dir) / (std::string(to_string(w.construction)) + ".json"),
                      dump(instance_to_json(w.instance)));
  }
  bool all_certified = true;
  for (const auto& w : built) all_certified &= w.certified();

  if (c.format == "json") {
    Json j{{"seed", seed}, {"graph", graph_to_json(g)}};
    Json arr = Json::array();
    for (const auto& w : built) arr.push_back(to_json(w));
    j["constructions"] = arr;
    if (found) j["search"] = to_json(*found);
    emit(c, dump(j));
  } else {
    std::ostringstream out;
    out << "# seed " << seed << '\n';
    for (const auto& w : built)
      out << to_string(w.construction) << ": predicted " << to_string(w.predicted_gamma)
          << ", realized " << to_string(w.realized_gamma)
          << (w.certified() ? " (certified)" : " (NOT certified)") << '\n';
    if (found)
      out << "adversarial search: minimum " << to_string(found->min_gamma) << " over "
          << found->instances_evaluated << " instances (tiny family "
          << (found->exhaustive_family_run ? "searched" : "skipped") << ")\n";
    emit(c, out.str());
  }
  if (!all_certified) {
    std::cerr << "error: a construction did not realize its predicted efficiency\n";
    return kConsistency;
  }
  return kOk;
}

int cmd_design(const Common& c, std::size_t n, std::size_t m) {
  require_format(c.format, {"table", "json", "dot"});
  const auto d = optimal_structure(n, m);
  if (c.format == "json") {
    emit(c, dump(to_json(d)));
  } else if (c.format == "dot") {
    emit(c, graph_to_dot(d.graph, d.partition));
  } else {
    std::ostringstream out;
    out << "design " << to_string(d.case_tag) << ": " << d.m_used << " of " << m
        << " edges used, independence number " << d.r << '\n';
    if (!d.partition.empty()) {
      out << "cliques:";
      for (auto p : d.partition) out << ' ' << join_agents(p);
      out << '\n';
    }
    out << "edges:";
    for (const auto& [a, b] : d.graph.edges()) out << " (" << a + 1 << "," << b + 1 << ")";
    out << "\nguaranteed efficiency " << to_string(d.gamma_guaranteed) << '\n';
    emit(c, out.str());
  }
  return kOk;
}

int cmd_curve(const Common& c, std::size_t n) {
  require_format(c.format, {"table", "csv", "json"});
  const auto curve = efficiency_curve(n);
  if (c.format == "csv") {
    emit(c, curve_to_csv(curve));
  } else if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& p : curve)
      arr.push_back({{"m", p.m}, {"gamma", rational_to_json(p.gamma)}, {"r", p.r},
                     {"case", to_string(p.case_tag)}});
    emit(c, dump(Json{{"n", n}, {"kind", "guaranteed efficiency of the optimal design"}, {"points", arr}}));
  } else {
    std::ostringstream out;
    out << "# guaranteed efficiency of the optimal design (not measured on instances)\n";
    out << std::left << std::setw(6) << "m" << std::setw(8) << "gamma" << std::setw(4) << "r"
        << "case\n";
    for (const auto& p : curve)
      out << std::setw(6) << p.m << std::setw(8) << to_string(p.gamma) << std::setw(4) << p.r
          << to_string(p.case_tag) << '\n';
    emit(c, out.str());
  }
  return kOk;
}

int cmd_verify(const Common& c, const std::string& data, std::uint64_t seed) {
  require_format(c.format, {"table", "json"});
  AcceptanceOptions o;
  o.data_dir = data;
  o.seed = seed;
  const auto results = run_acceptance(o);
  bool ok = true;
  for (const auto& r : results) ok &= r.passed;
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    emit(c, dump(Json{{"seed", seed}, {"passed", ok}, {"criteria", arr}}));
  } else {
    std::ostringstream out;
    out << "# seed " << seed << '\n';
    for (const auto& r : results) out << format_result(r) << '\n';
    emit(c, out.str());
  }
  return ok ? kOk : kConsistency;
}

int cmd_audit(const Common& c, const std::string& inst_path, std::size_t guard) {
  require_format(c.format, {"table", "json"});
  const auto inst = instance_from_json(read_json_file(inst_path));
  const auto report = audit_properties(inst.oracle, guard);
  if (c.format == "json") {
    emit(c, dump(to_json(report)));
  } else {
    std::ostringstream out;
    out << "ground set " << inst.oracle.ground_size() << " elements\n";
    out << "normalized " << (report.normalized ? "yes" : "no") << ", monotone "
        << (report.monotone ? "yes" : "no") << ", submodular "
        << (report.submodular ? "yes" : "no") << '\n';
    for (const auto& w : to_json(report)["witnesses"])
      out << "counterexample (" << w["property"].get<std::string>() << "): A = " << action_text(w["a"])
          << ", B = " << action_text(w["b"]) << ", x = " << w["x"].dump() << '\n';
    emit(c, out.str());
  }
  return report.passed() ? kOk : kConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed greedy submodular maximization under information graphs"};
  app.require_subcommand(1);
  Common common;
  std::string graph, instance, tie = "worst", out_dir, data = "";
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBranchGuard;
  std::uint64_t samples = SearchBudget{}.random_samples;
  std::size_t n = 0, m = 0, guard = kDefaultAuditGuard;
  bool trace = false, search = false;

  auto* analyze = app.add_subcommand("analyze", "Graph statistics and efficiency bounds");
  analyze->add_option("--graph", graph, "Graph JSON file")->required();
  analyze->add_option("--format", common.format, "table | json | dot");
  analyze->add_option("--out", common.out, "Output file");

  auto* solve = app.add_subcommand("solve", "Run the greedy algorithm on an instance");
  solve->add_option("--instance", instance, "Instance JSON file")->required();
  solve->add_option("--graph", graph, "Graph JSON file")->required();
  solve->add_option("--tie", tie, "worst | first | random");
  solve->add_option("--seed", seed, "Seed for --tie random");
  solve->add_option("--budget", budget, "Branch guard for worst-case tie enumeration");
  solve->add_flag("--trace", trace, "Per-agent marginals and argmax sets");
  solve->add_option("--format", common.format, "table | json");
  solve->add_option("--out", common.out, "Output file");

  auto* worst = app.add_subcommand("worst-case", "Build bound-attaining instances for a graph");
  worst->add_option("--graph", graph, "Graph JSON file")->required();
  worst->add_option("--out-dir", out_dir, "Write instance JSON files here");
  worst->add_flag("--search", search, "Also run the adversarial search");
  worst->add_option("--seed", seed, "Search seed");
  worst->add_option("--budget", samples, "Random samples for the search");
  worst->add_option("--format", common.format, "table | json");
  worst->add_option("--out", common.out, "Output file");

  auto* design = app.add_subcommand("design", "Edge-budget-optimal information graph");
  design->add_option("--n", n, "Agents")->required();
  design->add_option("--m", m, "Edge budget")->required();
  design->add_option("--format", common.format, "table | json | dot");
  design->add_option("--out", common.out, "Output file");

  auto* curve = app.add_subcommand("curve", "Guaranteed efficiency for every edge budget");
  curve->add_option("--n", n, "Agents")->required();
  curve->add_option("--format", common.format, "csv | table | json");
  curve->add_option("--out", common.out, "Output file");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--data", data, "Fixture directory (default: built-in copies)");
  verify->add_option("--seed", seed, "Seed for the randomized suites")->default_val(AcceptanceOptions{}.seed);
  verify->add_option("--format", common.format, "table | json");
  verify->add_option("--out", common.out, "Output file");

  auto* audit = app.add_subcommand("audit", "Exhaustive property audit of an instance's function");
  audit->add_option("--instance", instance, "Instance JSON file")->required();
  audit->add_option("--guard", guard, "Largest ground set to enumerate");
  audit->add_option("--format", common.format, "table | json");
  audit->add_option("--out", common.out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  if (curve->parsed() && curve->count("--format") == 0) common.format = "csv";

  try {
    if (analyze->parsed()) return cmd_analyze(common, graph);
    if (solve->parsed()) return cmd_solve(common, instance, graph, tie, seed, budget, trace);
    if (worst->parsed()) return cmd_worst_case(common, graph, out_dir, search, seed, samples);
    if (design->parsed()) return cmd_design(common, n, m);
    if (curve->parsed()) return cmd_curve(common, n);
    if (verify->parsed()) return cmd_verify(common, data, seed);
    if (audit->parsed()) return cmd_audit(common, instance, guard);
  } catch (const GuardRefusal& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kGuard;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kConsistency;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
