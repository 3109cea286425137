#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace infogreedy {

inline constexpr std::size_t kMaxAgents = 64;
inline constexpr std::size_t kDefaultExhaustiveGuard = 16;

// Set of agents (0-based) as a bitmask; at most kMaxAgents agents.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  static VertexSet of(std::initializer_list<std::size_t> vs) {
    VertexSet s;
    for (auto v : vs) s.insert(v);
    return s;
  }
  static VertexSet range(std::size_t first, std::size_t last);  // [first, last)

  std::uint64_t bits() const { return bits_; }
  bool contains(std::size_t v) const { return (bits_ >> v) & 1u; }
  void insert(std::size_t v) { bits_ |= std::uint64_t{1} << v; }
  void erase(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::vector<std::size_t> members() const;

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet without(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the sorted member lists ({1,2} < {1,3} < {2}).
bool lex_less(VertexSet a, VertexSet b);

// "{1, 3}" using 1-based agent labels.
std::string format_agents(VertexSet s);

// Ordered DAG on agents 0..n-1: every edge (i, j) has i < j. Edge (j, i)
// means agent i observes agent j, so N_i is the in-neighbourhood of i.
class InfoGraph {
 public:
  InfoGraph() = default;

  // Edges use 0-based labels.
  static InfoGraph from_edges(std::size_t n,
                              const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  static InfoGraph complete(std::size_t n);
  static InfoGraph edgeless(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted lexicographically, 0-based.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  VertexSet in_neighbors(std::size_t i) const { return in_[i]; }
  VertexSet out_neighbors(std::size_t i) const { return out_[i]; }
  VertexSet neighbors(std::size_t i) const { return in_[i] | out_[i]; }
  bool has_edge(std::size_t from, std::size_t to) const { return out_[from].contains(to); }
  bool adjacent(std::size_t a, std::size_t b) const { return neighbors(a).contains(b); }

  VertexSet vertices() const { return VertexSet::range(0, n_); }
  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;
  bool is_complete() const { return edges_.size() == n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2; }

  friend bool operator==(const InfoGraph& a, const InfoGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<VertexSet> in_;
  std::vector<VertexSet> out_;
};

// Validating constructor over 1-based agent labels, as used in graph files.
InfoGraph build_graph(std::size_t n,
                      const std::vector<std::pair<std::size_t, std::size_t>>& labeled_edges);

// Inclusion-maximal cliques of the undirected shadow, sorted lexicographically.
std::vector<VertexSet> maximal_cliques(const InfoGraph& g);

struct CliqueMatrix {
  std::vector<std::vector<int>> rows;  // rows[c][v] = 1 iff v in clique c
  std::vector<VertexSet> cliques;      // by size, then lexicographic
};

inline constexpr std::size_t kDefaultCliqueRowGuard = std::size_t{1} << 16;

// Every clique (not only maximal ones), singletons first.
CliqueMatrix clique_matrix(const InfoGraph& g, std::size_t row_guard = kDefaultCliqueRowGuard);

struct ExactNumbers {
  std::size_t alpha = 0;
  std::size_t clique_cover = 0;
  std::size_t omega = 0;
  std::vector<VertexSet> max_independent_sets;  // all of size alpha, lexicographic
  std::vector<VertexSet> min_clique_cover;      // one partition of size clique_cover
};

ExactNumbers exact_numbers(const InfoGraph& g, std::size_t guard = kDefaultExhaustiveGuard);

// Independence number of the subgraph induced by `allowed`.
std::size_t independence_number_within(const InfoGraph& g, VertexSet allowed,
                                       std::size_t guard = kDefaultExhaustiveGuard);

struct SiblingWitness {
  VertexSet independent_set;  // J, a maximum independent set
  std::size_t observer = 0;   // w, outside J
  std::size_t observed = 0;   // i in J with i in N_w
  // No member of J observes w.
  bool clean = false;
};

// Structural facts forced on a graph lacking the Sibling Property.
struct StructureAudit {
  bool vacuous = false;  // J = V: nothing outside J to test
  bool unique_maximum = true;
  bool contains_last_two = true;
  bool alpha_drops_without_j = true;
  bool outside_nodes_hit_two = true;
  bool passed() const {
    return unique_maximum && contains_last_two && alpha_drops_without_j && outside_nodes_hit_two;
  }
};

struct SiblingVerdict {
  bool has_property = false;
  std::vector<SiblingWitness> witnesses;  // all (J, w, i) triples
  std::optional<StructureAudit> structure_audit;  // present iff !has_property

  // First clean witness if any, else the first witness. Requires has_property.
  const SiblingWitness& primary() const;
};

// Throws ConsistencyError if the property is absent and its structural audit fails.
SiblingVerdict sibling_property(const InfoGraph& g, std::size_t guard = kDefaultExhaustiveGuard);

}  // namespace infogreedy
