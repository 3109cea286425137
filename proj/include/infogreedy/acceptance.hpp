#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace infogreedy {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AcceptanceOptions {
  // Fixture directory; empty means the copies compiled into the library.
  std::filesystem::path data_dir;
  std::uint64_t seed = 20240611;
  std::size_t random_pairs = 500;
};

CriterionResult check_cover_example(const AcceptanceOptions& o);        // 1
CriterionResult check_clique_minus_edge(const AcceptanceOptions& o);    // 2
CriterionResult check_five_cycle(const AcceptanceOptions& o);           // 3
CriterionResult check_three_agent_tie(const AcceptanceOptions& o);      // 4
CriterionResult check_efficiency_bounds(const AcceptanceOptions& o);    // 5
CriterionResult check_full_information_floor(const AcceptanceOptions& o);  // 6
CriterionResult check_duality(const AcceptanceOptions& o);              // 7
CriterionResult check_turan_edge_counts(const AcceptanceOptions& o);    // 8
CriterionResult check_design_curve(const AcceptanceOptions& o);         // 9
CriterionResult check_design_optimality(const AcceptanceOptions& o);    // 10
CriterionResult check_no_sibling_minimum(const AcceptanceOptions& o);   // 11

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& o);

// "PASS AC1 <name>: <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace infogreedy
