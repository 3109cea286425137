#include "infogreedy/info_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "infogreedy/errors.hpp"

namespace infogreedy {

VertexSet VertexSet::range(std::size_t first, std::size_t last) {
  VertexSet s;
  for (auto v = first; v < last; ++v) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  for (auto b = bits_; b != 0; b &= b - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string format_agents(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto v : s.members()) {
    out << (first ? "" : ", ") << v + 1;
    first = false;
  }
  out << '}';
  return out.str();
}

InfoGraph InfoGraph::from_edges(std::size_t n,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n > kMaxAgents)
    throw InputError("at most " + std::to_string(kMaxAgents) + " agents supported, got " +
                     std::to_string(n));
  InfoGraph g;
  g.n_ = n;
  g.in_.assign(n, VertexSet{});
  g.out_.assign(n, VertexSet{});
  for (const auto& [from, to] : edges) {
    if (from >= n || to >= n)
      throw InputError("edge (" + std::to_string(from + 1) + ", " + std::to_string(to + 1) +
                       ") references an agent outside 1.." + std::to_string(n));
    if (from >= to)
      throw AdmissibilityError("edge (" + std::to_string(from + 1) + ", " +
                               std::to_string(to + 1) +
                               ") does not go from an earlier to a later agent");
    if (g.out_[from].contains(to))
      throw InputError("duplicate edge (" + std::to_string(from + 1) + ", " +
                       std::to_string(to + 1) + ")");
    g.out_[from].insert(to);
    g.in_[to].insert(from);
    g.edges_.emplace_back(from, to);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

InfoGraph InfoGraph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return from_edges(n, edges);
}

InfoGraph InfoGraph::edgeless(std::size_t n) { return from_edges(n, {}); }

bool InfoGraph::is_clique(VertexSet s) const {
  for (auto v : s.members())
    if (!s.without(VertexSet::of({v})).is_subset_of(neighbors(v))) return false;
  return true;
}

bool InfoGraph::is_independent(VertexSet s) const {
  for (auto v : s.members())
    if (!(neighbors(v) & s).empty()) return false;
  return true;
}

InfoGraph build_graph(std::size_t n,
                      const std::vector<std::pair<std::size_t, std::size_t>>& labeled_edges) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(labeled_edges.size());
  for (const auto& [from, to] : labeled_edges) {
    if (from < 1 || to < 1 || from > n || to > n)
      throw InputError("edge (" + std::to_string(from) + ", " + std::to_string(to) +
                       ") references an agent outside 1.." + std::to_string(n));
    edges.emplace_back(from - 1, to - 1);
  }
  return InfoGraph::from_edges(n, edges);
}

namespace {

std::uint64_t low_bit(std::uint64_t x) { return x & (~x + 1); }

void bron_kerbosch(const InfoGraph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<VertexSet>& out) {
  if (p == 0) {
    if (x == 0) out.emplace_back(r);
    return;
  }
  // Pivot on the vertex of P | X with the most neighbours in P.
  std::size_t pivot = 0;
  int best = -1;
  for (auto b = p | x; b != 0; b &= b - 1) {
    const auto u = static_cast<std::size_t>(std::countr_zero(b));
    const int hits = std::popcount(p & g.neighbors(u).bits());
    if (hits > best) {
      best = hits;
      pivot = u;
    }
  }
  for (auto candidates = p & ~g.neighbors(pivot).bits(); candidates != 0;
       candidates &= candidates - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    const auto nv = g.neighbors(v).bits();
    const auto bit = std::uint64_t{1} << v;
    bron_kerbosch(g, r | bit, p & nv, x & nv, out);
    p &= ~bit;
    x |= bit;
  }
}

void check_guard(const InfoGraph& g, std::size_t guard, const char* what) {
  if (g.n() > guard) throw GuardRefusal(what, guard, g.n());
}

// Per-subset independence flags over all 2^n vertex subsets.
std::vector<std::uint8_t> independent_table(const InfoGraph& g) {
  const std::size_t n = g.n();
  std::vector<std::uint8_t> ind(std::size_t{1} << n, 0);
  ind[0] = 1;
  for (std::uint64_t mask = 1; mask < ind.size(); ++mask) {
    const auto v = static_cast<std::size_t>(std::countr_zero(mask));
    const auto rest = mask & (mask - 1);
    ind[mask] = ind[rest] && (g.neighbors(v).bits() & rest) == 0;
  }
  return ind;
}

std::vector<std::uint8_t> clique_table(const InfoGraph& g) {
  const std::size_t n = g.n();
  std::vector<std::uint8_t> clq(std::size_t{1} << n, 0);
  clq[0] = 1;
  for (std::uint64_t mask = 1; mask < clq.size(); ++mask) {
    const auto v = static_cast<std::size_t>(std::countr_zero(mask));
    const auto rest = mask & (mask - 1);
    clq[mask] = clq[rest] && (rest & ~g.neighbors(v).bits()) == 0;
  }
  return clq;
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const InfoGraph& g) {
  std::vector<VertexSet> out;
  if (g.n() == 0) return out;
  bron_kerbosch(g, 0, g.vertices().bits(), 0, out);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

CliqueMatrix clique_matrix(const InfoGraph& g, std::size_t row_guard) {
  std::vector<VertexSet> cliques;
  // Grow each clique only by vertices above its maximum, so each is produced once.
  std::vector<VertexSet> frontier;
  for (std::size_t v = 0; v < g.n(); ++v) frontier.push_back(VertexSet::of({v}));
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (auto c : frontier) {
      cliques.push_back(c);
      if (cliques.size() > row_guard)
        throw GuardRefusal("clique matrix too large; use the maximal-clique LP path", row_guard,
                           cliques.size());
      const auto top = c.members().back();
      auto common = VertexSet::range(top + 1, g.n());
      for (auto v : c.members()) common = common & g.neighbors(v);
      for (auto v : common.members()) {
        auto grown = c;
        grown.insert(v);
        next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  std::stable_sort(cliques.begin(), cliques.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  CliqueMatrix w;
  w.cliques = cliques;
  for (auto c : cliques) {
    std::vector<int> row(g.n(), 0);
    for (auto v : c.members()) row[v] = 1;
    w.rows.push_back(std::move(row));
  }
  return w;
}

ExactNumbers exact_numbers(const InfoGraph& g, std::size_t guard) {
  check_guard(g, guard, "exact graph numbers need exhaustive search");
  const std::size_t n = g.n();
  const auto ind = independent_table(g);
  const auto clq = clique_table(g);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;

  ExactNumbers out;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (ind[mask]) {
      if (size > out.alpha) {
        out.alpha = size;
        out.max_independent_sets.clear();
      }
      if (size == out.alpha) out.max_independent_sets.emplace_back(mask);
    }
    if (clq[mask]) out.omega = std::max(out.omega, size);
  }
  std::sort(out.max_independent_sets.begin(), out.max_independent_sets.end(), lex_less);

  // cover[mask]: fewest cliques partitioning mask; the block holding the lowest
  // vertex is enumerated as a submask of the remaining vertices.
  std::vector<std::uint8_t> cover(full + 1, 0);
  std::vector<std::uint64_t> choice(full + 1, 0);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const auto lowest = low_bit(mask);
    const auto rest = mask ^ lowest;
    std::uint8_t best = 0xff;
    std::uint64_t best_block = lowest;
    for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
      const auto block = sub | lowest;
      if (clq[block]) {
        const auto cand = static_cast<std::uint8_t>(cover[mask ^ block] + 1);
        // Submasks run in decreasing order; the first optimum found is kept.
        if (cand < best) {
          best = cand;
          best_block = block;
        }
      }
      if (sub == 0) break;
    }
    cover[mask] = best;
    choice[mask] = best_block;
  }
  out.clique_cover = n == 0 ? 0 : cover[full];
  for (auto mask = full; mask != 0; mask ^= choice[mask]) out.min_clique_cover.emplace_back(choice[mask]);
  std::sort(out.min_clique_cover.begin(), out.min_clique_cover.end(), lex_less);
  return out;
}

std::size_t independence_number_within(const InfoGraph& g, VertexSet allowed, std::size_t guard) {
  check_guard(g, guard, "independence number needs exhaustive search");
  const auto ind = independent_table(g);
  std::size_t best = 0;
  const auto a = allowed.bits();
  for (std::uint64_t sub = a;; sub = (sub - 1) & a) {
    if (ind[sub]) best = std::max<std::size_t>(best, std::popcount(sub));
    if (sub == 0) break;
  }
  return best;
}

const SiblingWitness& SiblingVerdict::primary() const {
  if (witnesses.empty()) throw InputError("graph lacks the Sibling Property; no witness");
  for (const auto& w : witnesses)
    if (w.clean) return w;
  return witnesses.front();
}

SiblingVerdict sibling_property(const InfoGraph& g, std::size_t guard) {
  const auto numbers = exact_numbers(g, guard);
  SiblingVerdict verdict;
  for (auto j : numbers.max_independent_sets) {
    for (auto w : g.vertices().without(j).members()) {
      for (auto i : (g.in_neighbors(w) & j).members()) {
        const bool clean = (g.out_neighbors(w) & j).empty();
        verdict.witnesses.push_back({j, w, i, clean});
      }
    }
  }
  verdict.has_property = !verdict.witnesses.empty();
  if (verdict.has_property) return verdict;

  StructureAudit audit;
  const auto j = numbers.max_independent_sets.front();
  const auto outside = g.vertices().without(j);
  if (outside.empty()) {
    audit.vacuous = true;
  } else {
    const std::size_t n = g.n();
    audit.unique_maximum = numbers.max_independent_sets.size() == 1;
    audit.contains_last_two = j.contains(n - 1) && j.contains(n - 2);
    audit.alpha_drops_without_j = independence_number_within(g, outside, guard) < numbers.alpha;
    for (auto v : outside.members())
      if ((g.out_neighbors(v) & j).size() < 2) audit.outside_nodes_hit_two = false;
    if (!audit.passed())
      throw ConsistencyError("graph lacks the Sibling Property but violates its structural "
                             "consequences (J = " + format_agents(j) + ")");
  }
  verdict.structure_audit = audit;
  return verdict;
}

}  // namespace infogreedy
