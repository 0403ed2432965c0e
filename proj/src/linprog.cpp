#include "looijenga/linprog.hpp"

#include <cstddef>
#include <stdexcept>

namespace looijenga {

namespace {

// Standard-form phase 1 with artificial variables and Bland's rule.
struct Tableau {
  std::size_t m, n;                       // constraints, structural columns
  std::vector<std::vector<Rat>> t;        // m+1 rows, n+m+1 cols; last row = objective
  std::vector<std::size_t> basis;         // per row, column index of the basic variable
};

}  // namespace

LpResult lp_solve(const LpProblem& p) {
  const std::size_t m = p.a.size();
  std::size_t ncols = p.nonneg.size();
  for (const auto& row : p.a)
    if (row.size() != ncols) throw std::invalid_argument("lp_solve: ragged matrix");
  if (p.b.size() != m) throw std::invalid_argument("lp_solve: rhs size mismatch");

  // Split free variables: column j -> (j+, j-).
  std::vector<std::size_t> plus_col(ncols), minus_col(ncols, static_cast<std::size_t>(-1));
  std::size_t n = 0;
  for (std::size_t j = 0; j < ncols; ++j) {
    plus_col[j] = n++;
    if (!p.nonneg[j]) minus_col[j] = n++;
  }

  Tableau tb;
  tb.m = m;
  tb.n = n;
  tb.t.assign(m + 1, std::vector<Rat>(n + m + 1, Rat(0)));
  tb.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rat bi = p.b[i];
    int sign = bi >= 0 ? 1 : -1;
    for (std::size_t j = 0; j < ncols; ++j) {
      Rat v = p.a[i][j] * sign;
      tb.t[i][plus_col[j]] = v;
      if (minus_col[j] != static_cast<std::size_t>(-1)) tb.t[i][minus_col[j]] = -v;
    }
    tb.t[i][n + i] = 1;  // artificial
    tb.t[i][n + m] = bi * sign;
    tb.basis[i] = n + i;
  }
  // Objective: minimize sum of artificials; row = -(sum of constraint rows) on
  // structural columns, value = -(sum b).
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n + m; ++j)
      if (j < n || j == n + m) tb.t[m][j] -= tb.t[i][j];

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    Rat pv = tb.t[pr][pc];
    for (auto& v : tb.t[pr]) v /= pv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == pr || tb.t[i][pc] == 0) continue;
      Rat f = tb.t[i][pc];
      for (std::size_t j = 0; j <= n + m; ++j) tb.t[i][j] -= f * tb.t[pr][j];
    }
    tb.basis[pr] = pc;
  };

  // Bland's rule: entering = lowest-index column with negative reduced cost,
  // leaving = lowest-index basic among the ratio-test minimizers.
  for (;;) {
    std::size_t pc = static_cast<std::size_t>(-1);
    for (std::size_t j = 0; j < n + m; ++j)
      if (tb.t[m][j] < 0) {
        pc = j;
        break;
      }
    if (pc == static_cast<std::size_t>(-1)) break;
    std::size_t pr = static_cast<std::size_t>(-1);
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (tb.t[i][pc] <= 0) continue;
      Rat ratio = tb.t[i][n + m] / tb.t[i][pc];
      if (pr == static_cast<std::size_t>(-1) || ratio < best ||
          (ratio == best && tb.basis[i] < tb.basis[pr])) {
        pr = i;
        best = ratio;
      }
    }
    if (pr == static_cast<std::size_t>(-1)) throw std::logic_error("lp_solve: unbounded phase 1");
    pivot(pr, pc);
  }

  LpResult res;
  Rat objective = -tb.t[m][n + m];
  if (objective > 0) {
    // Infeasible. Dual phase-1 optimum y* from the artificial reduced costs:
    // y*_i = 1 - cbar_{n+i}; after undoing the row sign flips, y satisfies
    // y^T A <= 0 on nonnegative columns, = 0 on free columns, and y^T b > 0.
    res.feasible = false;
    res.farkas.assign(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
      int sign = p.b[i] >= 0 ? 1 : -1;
      res.farkas[i] = (Rat(1) - tb.t[m][n + i]) * sign;
    }
    return res;
  }

  // Feasible: drive any remaining artificial variables out of the basis if
  // possible; degenerate-zero artificials are harmless for the point itself.
  res.feasible = true;
  std::vector<Rat> full(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tb.basis[i] < n) full[tb.basis[i]] = tb.t[i][n + m];
  res.x.assign(ncols, Rat(0));
  for (std::size_t j = 0; j < ncols; ++j) {
    res.x[j] = full[plus_col[j]];
    if (minus_col[j] != static_cast<std::size_t>(-1)) res.x[j] -= full[minus_col[j]];
  }
  return res;
}

}  // namespace looijenga
