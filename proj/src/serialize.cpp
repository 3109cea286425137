#include "infogreedy/serialize.hpp"

#include <fstream>
#include <sstream>

#include "infogreedy/errors.hpp"

namespace infogreedy {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw InputError((pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const Json& field(const Json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) fail(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(pointer + "/" + key, "missing field");
  return *it;
}

const Json& array_at(const Json& j, const std::string& pointer) {
  if (!j.is_array()) fail(pointer, "expected an array");
  return j;
}

std::size_t index_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer()) fail(pointer, "expected an integer");
  const auto v = j.get<long long>();
  if (v < 0) fail(pointer, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::vector<Rational> rationals_from_json(const Json& j, const std::string& pointer) {
  std::vector<Rational> out;
  const auto& arr = array_at(j, pointer);
  for (std::size_t k = 0; k < arr.size(); ++k)
    out.push_back(rational_from_json(arr[k], pointer + "/" + std::to_string(k)));
  return out;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

Json agents_to_json(VertexSet s) {
  Json out = Json::array();
  for (auto v : s.members()) out.push_back(v + 1);
  return out;
}

Json ids_to_json(const ElementSet& s) {
  Json out = Json::array();
  for (auto id : s.ids()) out.push_back(id);
  return out;
}

const char* kind_of(const OracleDescription& d) {
  switch (d.index()) {
    case 0: return "wsc";
    case 1: return "vta";
    case 2: return "capped_sum";
    case 3: return "capped_coverage";
    default: return "custom";
  }
}

// Actions in files name targets for vta; map back to target indices.
Json action_to_json(const Instance& inst, std::size_t agent, const ElementSet& action) {
  if (const auto* vta = std::get_if<TargetAssignmentSpec>(&inst.oracle.description())) {
    Json out = Json::array();
    const auto targets = vta->target_values.size();
    for (auto id : action.ids()) out.push_back(id - agent * targets);
    return out;
  }
  return ids_to_json(action);
}

const char* property_name(Property p) {
  switch (p) {
    case Property::normalized: return "normalized";
    case Property::monotone: return "monotone";
    case Property::submodular: return "submodular";
  }
  return "?";
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& pointer) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(pointer, "expected a rational as an integer or \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(pointer, e.what());
  }
}

Json rational_to_json(const Rational& r) { return to_string(r); }

InfoGraph graph_from_json(const Json& j) {
  const auto n = index_from_json(field(j, "n", ""), "/n");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (j.contains("edges")) {
    const auto& arr = array_at(j["edges"], "/edges");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const std::string p = "/edges/" + std::to_string(k);
      if (!arr[k].is_array() || arr[k].size() != 2) fail(p, "expected a pair [i, j]");
      edges.emplace_back(index_from_json(arr[k][0], p + "/0"), index_from_json(arr[k][1], p + "/1"));
    }
  }
  return build_graph(n, edges);
}

Json graph_to_json(const InfoGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
  return Json{{"n", g.n()}, {"edges", edges}};
}

Instance instance_from_json(const Json& j) {
  const auto& kind_json = field(j, "kind", "");
  if (!kind_json.is_string()) fail("/kind", "expected a string");
  const auto kind = kind_json.get<std::string>();

  const auto& actions_json = array_at(field(j, "actions", ""), "/actions");
  if (actions_json.empty()) fail("/actions", "at least one agent is required");
  const std::size_t n = actions_json.size();

  std::optional<ValuationOracle> oracle;
  std::size_t targets = 0;  // vta only
  if (kind == "wsc") {
    oracle = build_wsc({rationals_from_json(field(j, "values", ""), "/values")});
  } else if (kind == "vta") {
    TargetAssignmentSpec spec{rationals_from_json(field(j, "values", ""), "/values"),
                              rationals_from_json(field(j, "probs", ""), "/probs")};
    if (spec.success_probs.size() != n)
      fail("/probs", "expected one probability per agent (" + std::to_string(n) + ")");
    targets = spec.target_values.size();
    oracle = build_vta(spec);
  } else if (kind == "capped_sum") {
    auto weights = rationals_from_json(field(j, "weights", ""), "/weights");
    if (weights.size() != n)
      fail("/weights", "expected one weight per agent (" + std::to_string(n) + ")");
    oracle = build_capped_sum({std::move(weights)});
  } else if (kind == "capped_coverage") {
    CappedCoverageSpec spec;
    spec.agents = n;
    const auto& atoms = array_at(field(j, "atoms", ""), "/atoms");
    for (std::size_t k = 0; k < atoms.size(); ++k) {
      const std::string p = "/atoms/" + std::to_string(k);
      CoverageAtom atom;
      const auto& agents = array_at(field(atoms[k], "agents", p), p + "/agents");
      for (std::size_t a = 0; a < agents.size(); ++a) {
        const auto label = index_from_json(agents[a], p + "/agents/" + std::to_string(a));
        if (label < 1 || label > n) fail(p + "/agents/" + std::to_string(a), "agent out of range");
        atom.agents.insert(label - 1);
      }
      atom.measure = rational_from_json(field(atoms[k], "measure", p), p + "/measure");
      spec.atoms.push_back(atom);
    }
    oracle = build_capped_coverage(spec);
  } else {
    fail("/kind", "unknown kind '" + kind + "'");
  }

  std::vector<ActionSet> actions(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string p = "/actions/" + std::to_string(i);
    const auto& xi = array_at(actions_json[i], p);
    if (xi.empty()) fail(p, "action set must be nonempty");
    for (std::size_t k = 0; k < xi.size(); ++k) {
      const std::string pk = p + "/" + std::to_string(k);
      const auto& elems = array_at(xi[k], pk);
      ElementSet action;
      for (std::size_t e = 0; e < elems.size(); ++e) {
        const std::string pe = pk + "/" + std::to_string(e);
        auto id = index_from_json(elems[e], pe);
        if (kind == "vta") {
          if (id >= targets) fail(pe, "target out of range");
          id = i * targets + id;
        }
        if (id >= oracle->ground_size()) fail(pe, "element out of range");
        action.insert(id);
      }
      actions[i].push_back(action);
    }
  }
  return make_instance(std::move(*oracle), std::move(actions));
}

Json instance_to_json(const Instance& inst) {
  const auto& d = inst.oracle.description();
  Json out;
  out["kind"] = kind_of(d);
  if (const auto* s = std::get_if<WeightedSetCoverSpec>(&d)) {
    out["values"] = rationals_to_json(s->target_values);
  } else if (const auto* s = std::get_if<TargetAssignmentSpec>(&d)) {
    out["values"] = rationals_to_json(s->target_values);
    out["probs"] = rationals_to_json(s->success_probs);
  } else if (const auto* s = std::get_if<CappedSumSpec>(&d)) {
    out["weights"] = rationals_to_json(s->weights);
  } else if (const auto* s = std::get_if<CappedCoverageSpec>(&d)) {
    Json atoms = Json::array();
    for (const auto& a : s->atoms)
      atoms.push_back({{"agents", agents_to_json(a.agents)}, {"measure", rational_to_json(a.measure)}});
    out["atoms"] = atoms;
  } else {
    throw InputError("custom oracles have no file representation");
  }
  Json actions = Json::array();
  for (std::size_t i = 0; i < inst.n(); ++i) {
    Json xi = Json::array();
    for (const auto& a : inst.actions[i]) xi.push_back(action_to_json(inst, i, a));
    actions.push_back(xi);
  }
  out["actions"] = actions;
  return out;
}

Json to_json(const BoundsReport& b) {
  Json out{{"lower", rational_to_json(b.lower)},
           {"upper", rational_to_json(b.upper)},
           {"alpha_star", rational_to_json(b.alpha_star)}};
  out["sibling_upper"] = b.sibling_upper ? rational_to_json(*b.sibling_upper) : Json(nullptr);
  out["lower_tight"] = b.lower_tight;
  out["upper_tight"] = b.upper_tight;
  return out;
}

Json to_json(const GraphAnalysis& a, const BoundsReport& b) {
  Json out;
  out["alpha"] = a.exact.alpha;
  out["clique_cover"] = a.exact.clique_cover;
  out["omega"] = a.exact.omega;
  out["alpha_star"] = rational_to_json(a.fractional.alpha_star);
  out["k_star"] = rational_to_json(a.fractional.k_star);
  out["lp_point"] = rationals_to_json(a.fractional.z);
  Json sets = Json::array();
  for (auto s : a.exact.max_independent_sets) sets.push_back(agents_to_json(s));
  out["max_independent_sets"] = sets;
  Json cover = Json::array();
  for (auto s : a.exact.min_clique_cover) cover.push_back(agents_to_json(s));
  out["min_clique_cover"] = cover;
  Json cliques = Json::array();
  for (auto s : a.fractional.cliques) cliques.push_back(agents_to_json(s));
  out["maximal_cliques"] = cliques;
  Json sib{{"has_property", a.sibling.has_property}};
  if (a.sibling.has_property) {
    const auto& w = a.sibling.primary();
    sib["witness"] = {{"J", agents_to_json(w.independent_set)},
                      {"w", w.observer + 1},
                      {"i", w.observed + 1},
                      {"clean", w.clean}};
    sib["witness_count"] = a.sibling.witnesses.size();
  } else if (a.sibling.structure_audit) {
    sib["structure_audit"] = {{"vacuous", a.sibling.structure_audit->vacuous},
                        {"passed", a.sibling.structure_audit->passed()}};
  }
  out["sibling"] = sib;
  out["bounds"] = to_json(b);
  return out;
}

Json to_json(const GreedyOutcome& o, const Instance& inst, bool with_trace) {
  Json out;
  out["value"] = rational_to_json(o.value);
  Json profile = Json::array();
  for (std::size_t i = 0; i < o.profile.size(); ++i)
    profile.push_back(action_to_json(inst, i, inst.actions[i][o.profile[i]]));
  out["profile"] = profile;
  out["profile_index"] = o.profile;
  out["branches_explored"] = o.branches_explored;
  if (with_trace) {
    Json trace = Json::array();
    for (const auto& s : o.trace)
      trace.push_back({{"agent", s.agent + 1},
                       {"observed", ids_to_json(s.observed)},
                       {"marginals", rationals_to_json(s.marginals)},
                       {"argmax", s.argmax},
                       {"chosen", s.chosen}});
    out["trace"] = trace;
  }
  return out;
}

Json to_json(const EfficiencyReport& r, const Instance& inst, bool with_trace) {
  Json opt_profile = Json::array();
  for (std::size_t i = 0; i < r.opt_profile.size(); ++i)
    opt_profile.push_back(action_to_json(inst, i, inst.actions[i][r.opt_profile[i]]));
  return Json{{"gamma", rational_to_json(r.gamma)},
              {"opt_value", rational_to_json(r.opt_value)},
              {"sol_value", rational_to_json(r.sol_value)},
              {"opt_profile", opt_profile},
              {"greedy", to_json(r.greedy, inst, with_trace)}};
}

Json to_json(const WorstCaseInstance& w) {
  return Json{{"construction", to_string(w.construction)},
              {"predicted_gamma", rational_to_json(w.predicted_gamma)},
              {"realized_gamma", rational_to_json(w.realized_gamma)},
              {"certified", w.certified()},
              {"instance", instance_to_json(w.instance)}};
}

Json to_json(const SearchResult& s) {
  return Json{{"min_gamma", rational_to_json(s.min_gamma)},
              {"instances_evaluated", s.instances_evaluated},
              {"exhaustive_family_run", s.exhaustive_family_run},
              {"witness", to_json(s.witness)}};
}

Json to_json(const DesignResult& d) {
  Json parts = Json::array();
  for (auto p : d.partition) parts.push_back(agents_to_json(p));
  return Json{{"n", d.graph.n()},
              {"m_used", d.m_used},
              {"r", d.r},
              {"gamma_guaranteed", rational_to_json(d.gamma_guaranteed)},
              {"case", to_string(d.case_tag)},
              {"partition", parts},
              {"graph", graph_to_json(d.graph)}};
}

Json to_json(const AuditReport& a) {
  Json w = Json::array();
  for (const auto& x : a.witnesses) {
    Json item{{"property", property_name(x.property)}, {"a", ids_to_json(x.a)}, {"b", ids_to_json(x.b)}};
    item["x"] = x.x ? Json(*x.x) : Json(nullptr);
    w.push_back(item);
  }
  return Json{{"normalized", a.normalized},
              {"monotone", a.monotone},
              {"submodular", a.submodular},
              {"passed", a.passed()},
              {"witnesses", w}};
}

std::string graph_to_dot(const InfoGraph& g, const std::vector<VertexSet>& clusters) {
  std::ostringstream out;
  out << "digraph info {\n  rankdir=LR;\n  node [shape=circle];\n";
  VertexSet placed;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    out << "  subgraph cluster_" << c + 1 << " {\n    label=\"clique " << c + 1 << "\";\n";
    for (auto v : clusters[c].members()) out << "    " << v + 1 << ";\n";
    out << "  }\n";
    placed = placed | clusters[c];
  }
  for (auto v : g.vertices().without(placed).members()) out << "  " << v + 1 << ";\n";
  // Invisible chain keeps agents in index order.
  for (std::size_t v = 0; v + 1 < g.n(); ++v)
    out << "  " << v + 1 << " -> " << v + 2 << " [style=invis];\n";
  for (const auto& [a, b] : g.edges()) out << "  " << a + 1 << " -> " << b + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string curve_to_csv(const std::vector<CurvePoint>& curve) {
  std::ostringstream out;
  out << "m,gamma_num,gamma_den,r,case_tag\n";
  for (const auto& p : curve)
    out << p.m << ',' << p.gamma.get_num().get_str() << ',' << p.gamma.get_den().get_str() << ','
        << p.r << ',' << to_string(p.case_tag) << '\n';
  return out.str();
}

std::vector<CurvePoint> curve_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "m,gamma_num,gamma_den,r,case_tag")
    throw InputError("curve CSV: unexpected header");
  std::vector<CurvePoint> out;
  for (std::size_t row = 2; std::getline(in, line); ++row) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    const std::string where = "curve CSV line " + std::to_string(row);
    if (cells.size() != 5) throw InputError(where + ": expected 5 columns");
    CurvePoint p;
    try {
      p.m = std::stoul(cells[0]);
      p.r = std::stoul(cells[3]);
    } catch (const std::exception&) {
      throw InputError(where + ": malformed integer");
    }
    p.gamma = parse_rational(cells[1] + "/" + cells[2]);
    if (cells[4] == "t_hat")
      p.case_tag = DesignCase::t_hat;
    else if (cells[4] == "clique_minus_edge")
      p.case_tag = DesignCase::clique_minus_edge;
    else
      throw InputError(where + ": unknown case tag '" + cells[4] + "'");
    out.push_back(p);
  }
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace infogreedy
