#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infogreedy/info_graph.hpp"
#include "infogreedy/rational.hpp"

namespace infogreedy {

// r disjoint near-equal cliques on contiguous index blocks, larger first.
struct TuranDesign {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<VertexSet> partition;
  InfoGraph graph;
};

TuranDesign complement_turan(std::size_t n, std::size_t r);

// Edge count of the complement Turan graph; requires 1 <= r <= n.
std::size_t edge_count_M(std::size_t n, std::size_t r);

// Complement Turan graph with the fewest parts whose edge count fits in m.
TuranDesign t_hat(std::size_t n, std::size_t m);

enum class DesignCase { t_hat, clique_minus_edge };
const char* to_string(DesignCase c);

struct DesignResult {
  InfoGraph graph;
  std::size_t m_used = 0;
  std::size_t r = 0;  // independence number of `graph`
  Rational gamma_guaranteed;
  DesignCase case_tag = DesignCase::t_hat;
  std::vector<VertexSet> partition;  // cliques of the design, empty for clique_minus_edge
};

// Edge-budget-optimal information graph for n agents and at most m edges.
DesignResult optimal_structure(std::size_t n, std::size_t m);

struct NoSiblingWitness {
  std::size_t m_min = 0;
  InfoGraph graph;
  VertexSet independent_set;  // the unique maximum independent set J
};

// Fewest-edge graph on n nodes with independence number r and without the
// Sibling Property; requires 2 <= r < n.
NoSiblingWitness min_edges_no_sibling(std::size_t n, std::size_t r);

struct CurvePoint {
  std::size_t m = 0;
  Rational gamma;
  std::size_t r = 0;
  DesignCase case_tag = DesignCase::t_hat;
  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

// Guaranteed efficiency of optimal_structure(n, m) for m = 0 .. n(n-1)/2.
std::vector<CurvePoint> efficiency_curve(std::size_t n);

}  // namespace infogreedy
