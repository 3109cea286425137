#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "infogreedy/errors.hpp"
#include "infogreedy/fixtures.hpp"
#include "infogreedy/generators.hpp"
#include "infogreedy/serialize.hpp"

using namespace infogreedy;

namespace {

Json parse(std::string_view text) { return Json::parse(text); }

// Same actions and the same value on every subset of the ground set.
void expect_same_instance(const Instance& a, const Instance& b) {
  ASSERT_EQ(a.n(), b.n());
  ASSERT_EQ(a.oracle.ground_size(), b.oracle.ground_size());
  for (std::size_t i = 0; i < a.n(); ++i) EXPECT_EQ(a.actions[i], b.actions[i]);
  const auto g = a.oracle.ground_size();
  ASSERT_LE(g, 16u);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    const auto s = ElementSet::from_mask(mask);
    EXPECT_EQ(a.oracle.evaluate(s), b.oracle.evaluate(s));
  }
}

Instance roundtrip(const Instance& inst) {
  return instance_from_json(Json::parse(instance_to_json(inst).dump()));
}

std::string expect_input_error(const std::string& text) {
  try {
    instance_from_json(Json::parse(text));
  } catch (const InputError& e) {
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Rationals, IntegersAndStrings) {
  EXPECT_EQ(rational_from_json(Json(3)), 3);
  EXPECT_EQ(rational_from_json(Json("1/3")), frac(1, 3));
  EXPECT_EQ(rational_from_json(Json("4/6")), frac(2, 3));
  EXPECT_EQ(rational_to_json(frac(2, 4)), Json("1/2"));
  EXPECT_EQ(rational_to_json(Rational(5)), Json("5"));
  EXPECT_THROW(rational_from_json(Json(0.5)), InputError);
}

TEST(Instances, FixtureParses) {
  const auto inst = instance_from_json(parse(fixtures::kFourAgentCoverInstance));
  EXPECT_EQ(inst.n(), 4u);
  EXPECT_EQ(inst.oracle.ground_size(), 5u);
  EXPECT_EQ(inst.actions[1][1], ElementSet{2});
  EXPECT_EQ(inst.oracle.evaluate({0, 2, 3, 4}), 9);
}

TEST(Instances, ErrorsCarryPointers) {
  EXPECT_NE(expect_input_error(R"({"kind":"wsc","values":[1],"actions":[[]]})").find("/actions/0"),
            std::string::npos);
  EXPECT_NE(expect_input_error(R"({"kind":"wsc","values":[1,"x/"],"actions":[[[0]]]})")
                .find("/values/1"),
            std::string::npos);
  EXPECT_NE(expect_input_error(R"({"kind":"wsc","values":[1],"actions":[[[4]]]})")
                .find("/actions/0/0/0"),
            std::string::npos);
  EXPECT_NE(expect_input_error(R"({"kind":"nope","values":[1],"actions":[[[0]]]})").find("/kind"),
            std::string::npos);
  EXPECT_NE(expect_input_error(R"({"kind":"wsc","actions":[[[0]]]})").find("/values"),
            std::string::npos);
  EXPECT_NE(expect_input_error(R"({"kind":"wsc","values":[-1],"actions":[[[0]]]})"), "");
  expect_input_error(R"({"kind":"vta","values":[1],"probs":[1,1],"actions":[[[0]]]})");
  expect_input_error(R"({"kind":"capped_coverage","atoms":[{"agents":[2],"measure":1}],"actions":[[[0]]]})");
}

TEST(Instances, RoundtripEveryKind) {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto wsc = random_wsc_instance(3, WscShape{}, rng);
    expect_same_instance(wsc, roundtrip(wsc));
    const auto vta = random_vta_instance(3, 12, rng);
    expect_same_instance(vta, roundtrip(vta));
  }
  const auto sum = make_instance(build_capped_sum({{frac(1, 2), frac(1, 3), 1}}),
                                 {{ElementSet{0}}, {ElementSet{1}, ElementSet{0}}, {ElementSet{2}}});
  expect_same_instance(sum, roundtrip(sum));
  CappedCoverageSpec cov{3, {{VertexSet::of({0, 2}), frac(1, 2)}, {VertexSet::of({1}), frac(2, 3)}}};
  const auto cc = make_instance(build_capped_coverage(cov),
                                {{ElementSet{0}}, {ElementSet{1}}, {ElementSet{2}, ElementSet{0}}});
  expect_same_instance(cc, roundtrip(cc));
  EXPECT_EQ(instance_to_json(cc)["atoms"][0]["agents"], Json::parse("[1, 3]"));
}

TEST(Instances, CustomOracleHasNoFileForm) {
  const auto inst = make_instance(make_custom_oracle(1, [](const ElementSet&) -> Rational { return 0; }, "zero"),
                                  {{ElementSet{0}}});
  EXPECT_THROW(instance_to_json(inst), InputError);
}

TEST(Graphs, OneBasedRoundtrip) {
  const auto g = graph_from_json(parse(fixtures::kFiveCycleGraph));
  EXPECT_EQ(g.n(), 5u);
  EXPECT_TRUE(g.has_edge(0, 4));
  const auto j = graph_to_json(g);
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[1,4]]})")), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n":3,"edges":[[2,2]]})")), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"edges":[]})")), InputError);
}

TEST(Reports, BoundsAsStrings) {
  const auto g = graph_from_json(parse(fixtures::kCliqueMinusEdgeGraph));
  const auto j = to_json(theorem1_bounds(g));
  EXPECT_EQ(j["upper"], Json("1/2"));
  EXPECT_EQ(j["lower"], Json("1/3"));
}

TEST(Reports, DesignDotHasClusters) {
  const auto d = complement_turan(8, 3);
  const auto dot = graph_to_dot(d.graph, d.partition);
  for (const char* name : {"cluster_1", "cluster_2", "cluster_3"})
    EXPECT_NE(dot.find(name), std::string::npos) << name;
  EXPECT_EQ(dot.find("cluster_4"), std::string::npos);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
}

TEST(Reports, Deterministic) {
  const auto inst = instance_from_json(parse(fixtures::kFourAgentCoverInstance));
  const auto g = graph_from_json(parse(fixtures::kFourAgentCoverGraph));
  const auto a = to_json(efficiency(inst, g), inst, true).dump();
  const auto b = to_json(efficiency(inst, g), inst, true).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"2/3\""), std::string::npos);
}

TEST(Curve, CsvRoundtrip) {
  const auto curve = efficiency_curve(6);
  const auto csv = curve_to_csv(curve);
  EXPECT_EQ(csv.rfind("m,gamma_num,gamma_den,r,case_tag\n", 0), 0u);
  EXPECT_EQ(curve_from_csv(csv), curve);
  EXPECT_THROW(curve_from_csv("bad\n"), InputError);
  EXPECT_THROW(curve_from_csv("m,gamma_num,gamma_den,r,case_tag\n1,2\n"), InputError);
}

TEST(Files, DataDirectoryMatchesFixtures) {
  const std::filesystem::path dir = INFOGREEDY_DATA_DIR;
  EXPECT_EQ(slurp(dir / "four_agent_cover.json"), fixtures::kFourAgentCoverInstance);
  EXPECT_EQ(slurp(dir / "four_agent_cover_graph.json"), fixtures::kFourAgentCoverGraph);
  EXPECT_EQ(slurp(dir / "clique_minus_edge.json"), fixtures::kCliqueMinusEdgeGraph);
  EXPECT_EQ(slurp(dir / "five_cycle.json"), fixtures::kFiveCycleGraph);
  EXPECT_EQ(slurp(dir / "three_agent_tie.json"), fixtures::kThreeAgentTieInstance);
  EXPECT_EQ(slurp(dir / "three_agent_tie_graph.json"), fixtures::kThreeAgentTieGraph);
}

TEST(Files, ErrorsAreClassified) {
  EXPECT_THROW(read_json_file("/nonexistent/none.json"), IoError);
  EXPECT_THROW(write_text_file("/nonexistent/dir/out.txt", "x"), IoError);
  const auto tmp = std::filesystem::temp_directory_path() / "infogreedy_bad.json";
  write_text_file(tmp, "{ not json");
  EXPECT_THROW(read_json_file(tmp), InputError);
  std::filesystem::remove(tmp);
}
