#include "infogreedy/design.hpp"

#include <algorithm>

#include "infogreedy/errors.hpp"

namespace infogreedy {

namespace {

// Closed form, also valid for n < r (every part has at most one node).
std::size_t turan_formula(std::size_t n, std::size_t r) {
  const std::size_t rem = n % r;
  const std::size_t lo = n / r;
  const std::size_t hi = lo + (rem ? 1 : 0);
  return rem * hi * (hi - (hi ? 1 : 0)) / 2 + (r - rem) * lo * (lo - (lo ? 1 : 0)) / 2;
}

std::size_t max_edges(std::size_t n) { return n * (n - (n ? 1 : 0)) / 2; }

}  // namespace

TuranDesign complement_turan(std::size_t n, std::size_t r) {
  if (r < 1 || r > n)
    throw InputError("complement Turan graph needs 1 <= r <= n, got n=" + std::to_string(n) +
                     ", r=" + std::to_string(r));
  TuranDesign d;
  d.n = n;
  d.r = r;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t start = 0;
  for (std::size_t part = 0; part < r; ++part) {
    const std::size_t size = n / r + (part < n % r ? 1 : 0);
    d.partition.push_back(VertexSet::range(start, start + size));
    for (std::size_t i = start; i < start + size; ++i)
      for (std::size_t j = i + 1; j < start + size; ++j) edges.emplace_back(i, j);
    start += size;
  }
  d.graph = InfoGraph::from_edges(n, edges);
  return d;
}

std::size_t edge_count_M(std::size_t n, std::size_t r) {
  if (r < 1 || r > n)
    throw InputError("M(n, r) needs 1 <= r <= n, got n=" + std::to_string(n) +
                     ", r=" + std::to_string(r));
  return turan_formula(n, r);
}

TuranDesign t_hat(std::size_t n, std::size_t m) {
  if (n == 0) throw InputError("design needs at least one agent");
  // No graph with at most m edges has independence number below this.
  std::size_t r = (n * n + 2 * m + n - 1) / (2 * m + n);
  r = std::clamp<std::size_t>(r, 1, n);
  while (edge_count_M(n, r) > m) ++r;
  return complement_turan(n, r);
}

const char* to_string(DesignCase c) {
  return c == DesignCase::t_hat ? "t_hat" : "clique_minus_edge";
}

DesignResult optimal_structure(std::size_t n, std::size_t m) {
  if (n == 0) throw InputError("design needs at least one agent");
  if (m > max_edges(n))
    throw InputError("edge budget " + std::to_string(m) + " exceeds " +
                     std::to_string(max_edges(n)) + " possible edges on " + std::to_string(n) +
                     " agents");
  DesignResult out;
  if (n >= 2 && m + 1 == max_edges(n)) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(i == n - 2 && j == n - 1)) edges.emplace_back(i, j);
    out.graph = InfoGraph::from_edges(n, edges);
    out.r = 2;
    out.gamma_guaranteed = Rational(1, 2);
    out.case_tag = DesignCase::clique_minus_edge;
  } else {
    auto d = t_hat(n, m);
    out.graph = std::move(d.graph);
    out.r = d.r;
    out.partition = std::move(d.partition);
    // All singletons: no outside observer exists, and subadditivity pins the
    // efficiency at 1/n.
    out.gamma_guaranteed = d.r == n ? Rational(1, static_cast<unsigned long>(n))
                                    : Rational(1, static_cast<unsigned long>(d.r + 1));
    out.case_tag = DesignCase::t_hat;
  }
  out.m_used = out.graph.edge_count();
  return out;
}

NoSiblingWitness min_edges_no_sibling(std::size_t n, std::size_t r) {
  if (r < 2 || r >= n)
    throw InputError("no-sibling witness needs 2 <= r < n, got n=" + std::to_string(n) +
                     ", r=" + std::to_string(r));
  const std::size_t outside = n - r;
  NoSiblingWitness out;
  out.m_min = turan_formula(outside, r - 1) + 2 * outside;

  // G' occupies the low indices, J the top r. Part k of G' points at the
  // J nodes k and k+1, so every independent set of G' meets more J nodes
  // than it has members and J stays the unique maximum.
  std::vector<VertexSet> parts;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (outside >= r - 1) {
    auto inner = complement_turan(outside, r - 1);
    parts = inner.partition;
    edges = inner.graph.edges();
  } else {
    for (std::size_t v = 0; v < outside; ++v) parts.push_back(VertexSet::of({v}));
  }
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (auto v : parts[k].members()) {
      edges.emplace_back(v, outside + k);
      edges.emplace_back(v, outside + k + 1);
    }
  out.graph = InfoGraph::from_edges(n, edges);
  out.independent_set = VertexSet::range(outside, n);
  return out;
}

std::vector<CurvePoint> efficiency_curve(std::size_t n) {
  std::vector<CurvePoint> curve;
  for (std::size_t m = 0; m <= max_edges(n); ++m) {
    const auto d = optimal_structure(n, m);
    curve.push_back({m, d.gamma_guaranteed, d.r, d.case_tag});
  }
  return curve;
}

}  // namespace infogreedy
