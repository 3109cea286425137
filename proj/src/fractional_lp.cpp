#include "infogreedy/fractional_lp.hpp"

#include <sstream>

#include "infogreedy/errors.hpp"

namespace infogreedy {

namespace {

using Row = std::vector<Rational>;

// Tableau for max c.x over equality rows with a basic feasible solution.
// Column `width` holds the right-hand side; `obj` holds reduced profits and
// minus the current objective value in its last entry.
struct Tableau {
  std::vector<Row> a;
  Row obj;
  std::vector<std::size_t> basis;
  std::size_t width = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a[r][c];
    for (auto& v : a[r]) v /= p;
    auto eliminate = [&](Row& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (std::size_t j = 0; j <= width; ++j) row[j] -= factor * a[r][j];
    };
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != r) eliminate(a[i]);
    eliminate(obj);
    basis[r] = c;
  }

  // Bland's rule: lowest entering column, ties in the ratio test broken by
  // the lowest basic column. Columns at or above `limit` never enter.
  void optimize(std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter == limit) return;
      std::size_t leave = a.size();
      Rational best;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i][enter] <= 0) continue;
        Rational ratio = a[i][width] / a[i][enter];
        if (leave == a.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == a.size()) throw LpError("linear program is unbounded");
      pivot(leave, enter);
    }
  }
};

void check_dimensions(const LinearProgram& lp) {
  if (lp.rows.size() != lp.rhs.size())
    throw LpError(std::to_string(lp.rows.size()) + " rows but " + std::to_string(lp.rhs.size()) +
                  " right-hand sides");
  for (std::size_t i = 0; i < lp.rows.size(); ++i)
    if (lp.rows[i].size() != lp.objective.size())
      throw LpError("row " + std::to_string(i) + " has " + std::to_string(lp.rows[i].size()) +
                    " coefficients, expected " + std::to_string(lp.objective.size()));
}

Rational dot(const Row& a, const Row& b) {
  Rational s;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  check_dimensions(lp);
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.rows.size();
  const bool minimize = lp.sense == Sense::minimize;

  // Internal form: max c.x, A x + s = b. A minimization with >= rows is
  // negated into that form.
  Row c = lp.objective;
  std::vector<Row> rows = lp.rows;
  Row b = lp.rhs;
  if (minimize) {
    for (auto& v : c) v = -v;
    for (auto& r : rows)
      for (auto& v : r) v = -v;
    for (auto& v : b) v = -v;
  }

  std::vector<std::size_t> needs_artificial;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) needs_artificial.push_back(i);

  Tableau t;
  const std::size_t structural = n + m;
  t.width = structural + needs_artificial.size();
  t.a.assign(m, Row(t.width + 1));
  t.basis.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.a[i][j] = rows[i][j];
    t.a[i][n + i] = 1;
    t.a[i][t.width] = b[i];
    t.basis[i] = n + i;
  }
  for (std::size_t k = 0; k < needs_artificial.size(); ++k) {
    const auto i = needs_artificial[k];
    for (auto& v : t.a[i]) v = -v;  // rhs now positive, slack coefficient -1
    t.a[i][structural + k] = 1;
    t.basis[i] = structural + k;
  }

  if (!needs_artificial.empty()) {
    // Phase I: maximize minus the sum of artificials.
    t.obj.assign(t.width + 1, Rational(0));
    for (std::size_t k = 0; k < needs_artificial.size(); ++k) {
      t.obj[structural + k] = -1;
      const auto& row = t.a[needs_artificial[k]];
      for (std::size_t j = 0; j <= t.width; ++j) t.obj[j] += row[j];
    }
    t.optimize(t.width);
    if (t.obj[t.width] != 0) throw LpError("linear program is infeasible");
    // Drive zero-level artificials out where a structural pivot exists.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < structural) continue;
      for (std::size_t j = 0; j < structural; ++j)
        if (t.a[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
    }
  }

  // Phase II objective row from scratch.
  auto cost = [&](std::size_t col) { return col < n ? c[col] : Rational(0); };
  t.obj.assign(t.width + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) t.obj[j] = c[j];
  for (std::size_t i = 0; i < m; ++i) {
    const Rational cb = cost(t.basis[i]);
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= t.width; ++j) t.obj[j] -= cb * t.a[i][j];
  }
  t.optimize(structural);

  LpSolution sol;
  sol.point.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] < n) sol.point[t.basis[i]] = t.a[i][t.width];
  // Row flips leave reduced costs unchanged, so y_i = -(reduced profit of s_i).
  sol.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) sol.dual[i] = -t.obj[n + i];
  sol.basis = t.basis;
  sol.optimum = dot(lp.objective, sol.point);

  const auto check = verify_certificate(lp, sol);
  if (!check.ok())
    throw ConsistencyError(std::string("simplex result failed its certificate:") +
                           (check.primal_feasible ? "" : " primal infeasible") +
                           (check.dual_feasible ? "" : " dual infeasible") +
                           (check.objectives_match ? "" : " duality gap"));
  return sol;
}

CertificateCheck verify_certificate(const LinearProgram& lp, const LpSolution& s) {
  check_dimensions(lp);
  CertificateCheck out;
  const std::size_t n = lp.objective.size();
  const std::size_t m = lp.rows.size();
  const bool minimize = lp.sense == Sense::minimize;
  if (s.point.size() != n || s.dual.size() != m) return out;

  out.primal_feasible = true;
  for (const auto& v : s.point)
    if (v < 0) out.primal_feasible = false;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational lhs = dot(lp.rows[i], s.point);
    if (minimize ? lhs < lp.rhs[i] : lhs > lp.rhs[i]) out.primal_feasible = false;
  }

  out.dual_feasible = true;
  for (const auto& v : s.dual)
    if (v < 0) out.dual_feasible = false;
  for (std::size_t j = 0; j < n; ++j) {
    Rational col;
    for (std::size_t i = 0; i < m; ++i) col += lp.rows[i][j] * s.dual[i];
    if (minimize ? col > lp.objective[j] : col < lp.objective[j]) out.dual_feasible = false;
  }

  const Rational primal = dot(lp.objective, s.point);
  const Rational dual = dot(lp.rhs, s.dual);
  out.objectives_match = primal == dual && primal == s.optimum;
  return out;
}

std::string format_lp(const LinearProgram& lp) {
  std::ostringstream out;
  auto term_list = [&](const Row& coeffs) {
    bool any = false;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      out << (any ? " + " : "") << to_string(coeffs[j]) << " x" << j + 1;
      any = true;
    }
    if (!any) out << "0";
  };
  out << (lp.sense == Sense::maximize ? "maximize " : "minimize ");
  term_list(lp.objective);
  out << "\nsubject to\n";
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    out << "  ";
    term_list(lp.rows[i]);
    out << (lp.sense == Sense::maximize ? " <= " : " >= ") << to_string(lp.rhs[i]) << '\n';
  }
  out << "  x >= 0\n";
  return out.str();
}

LinearProgram independence_program(std::size_t n, const std::vector<VertexSet>& cliques) {
  LinearProgram lp;
  lp.sense = Sense::maximize;
  lp.objective.assign(n, Rational(1));
  for (const auto& c : cliques) {
    Row row(n);
    for (auto v : c.members()) row[v] = 1;
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(1);
  }
  return lp;
}

LinearProgram cover_program(std::size_t n, const std::vector<VertexSet>& cliques) {
  LinearProgram lp;
  lp.sense = Sense::minimize;
  lp.objective.assign(cliques.size(), Rational(1));
  for (std::size_t v = 0; v < n; ++v) {
    Row row(cliques.size());
    for (std::size_t k = 0; k < cliques.size(); ++k)
      if (cliques[k].contains(v)) row[k] = 1;
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(1);
  }
  return lp;
}

FractionalNumbers fractional_numbers(const InfoGraph& g, std::size_t clique_guard) {
  FractionalNumbers out;
  out.cliques = maximal_cliques(g);
  if (out.cliques.size() > clique_guard)
    throw GuardRefusal("maximal clique enumeration refused", clique_guard, out.cliques.size());
  const auto primal = solve_lp(independence_program(g.n(), out.cliques));
  const auto cover = solve_lp(cover_program(g.n(), out.cliques));
  out.alpha_star = primal.optimum;
  out.k_star = cover.optimum;
  out.z = primal.point;
  out.y = cover.point;
  if (out.alpha_star != out.k_star)
    throw ConsistencyError("fractional independence " + to_string(out.alpha_star) +
                           " differs from fractional clique cover " + to_string(out.k_star));
  return out;
}

Rational alpha_star(const InfoGraph& g) { return fractional_numbers(g).alpha_star; }

Rational k_star(const InfoGraph& g) { return fractional_numbers(g).k_star; }

Rational alpha_star_all_cliques(const InfoGraph& g, std::size_t row_guard) {
  const auto matrix = clique_matrix(g, row_guard);
  return solve_lp(independence_program(g.n(), matrix.cliques)).optimum;
}

}  // namespace infogreedy
