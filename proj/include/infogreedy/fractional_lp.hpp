#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "infogreedy/info_graph.hpp"
#include "infogreedy/rational.hpp"

namespace infogreedy {

enum class Sense { maximize, minimize };

// maximize c.x s.t. rows.x <= rhs, or minimize c.x s.t. rows.x >= rhs; x >= 0.
struct LinearProgram {
  Sense sense = Sense::maximize;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
};

struct LpSolution {
  Rational optimum;
  std::vector<Rational> point;
  // One multiplier per row, nonnegative. Dual of a max LP is min rhs.y s.t.
  // rows^T y >= c; dual of a min LP is max rhs.y s.t. rows^T y <= c.
  std::vector<Rational> dual;
  std::vector<std::size_t> basis;  // column ids: variables, then one slack per row
};

struct CertificateCheck {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool objectives_match = false;
  bool ok() const { return primal_feasible && dual_feasible && objectives_match; }
};

// Two-phase dense-tableau simplex over exact rationals with Bland's rule.
// Throws LpError on malformed dimensions, infeasibility or unboundedness, and
// ConsistencyError if the result fails its own certificate.
LpSolution solve_lp(const LinearProgram& lp);

CertificateCheck verify_certificate(const LinearProgram& lp, const LpSolution& solution);

// Plain-text dump, one constraint per line.
std::string format_lp(const LinearProgram& lp);

// max 1.z s.t. W z <= 1, z >= 0 with W the indicator rows of `cliques`.
LinearProgram independence_program(std::size_t n, const std::vector<VertexSet>& cliques);
// min 1.y s.t. W^T y >= 1, y >= 0; one variable per clique.
LinearProgram cover_program(std::size_t n, const std::vector<VertexSet>& cliques);

struct FractionalNumbers {
  Rational alpha_star;
  Rational k_star;
  std::vector<VertexSet> cliques;   // maximal cliques, the LP rows
  std::vector<Rational> z;          // primal optimum over agents
  std::vector<Rational> y;          // cover optimum over `cliques`
};

inline constexpr std::size_t kDefaultMaximalCliqueGuard = std::size_t{1} << 12;

// Solves both programs independently over maximal cliques. Throws
// ConsistencyError if the optima differ.
FractionalNumbers fractional_numbers(const InfoGraph& g,
                                     std::size_t clique_guard = kDefaultMaximalCliqueGuard);

Rational alpha_star(const InfoGraph& g);
Rational k_star(const InfoGraph& g);

// Same primal LP over every clique (the full clique matrix).
Rational alpha_star_all_cliques(const InfoGraph& g,
                                std::size_t row_guard = kDefaultCliqueRowGuard);

}  // namespace infogreedy
