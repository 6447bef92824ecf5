#include "singlift/lp.hpp"

#include <stdexcept>

namespace singlift {

namespace {

struct Tableau {
  // rows x (cols + 1); last column is the right-hand side.
  std::vector<std::vector<Rational>> t;
  std::vector<int> basis;  // basic column per row
  int rows = 0, cols = 0;

  void pivot(int r, int c) {
    Rational piv = t[r][c];
    for (auto& v : t[r]) v /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      Rational f = t[i][c];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }
};

// Minimizes cost.x over the tableau's basic feasible region (Bland's rule).
// Returns false on unboundedness, leaving `entering` at the offending column.
bool run_simplex(Tableau& tab, const std::vector<Rational>& cost,
                 const std::vector<bool>& allowed, int& entering) {
  for (;;) {
    entering = -1;
    for (int j = 0; j < tab.cols && entering < 0; ++j) {
      if (!allowed[j]) continue;
      // reduced cost = cost_j - sum_i cost_{basis(i)} * t[i][j]
      Rational rc = cost[j];
      for (int i = 0; i < tab.rows; ++i) {
        const Rational& cb = cost[tab.basis[i]];
        if (!cb.is_zero() && !tab.t[i][j].is_zero()) rc -= cb * tab.t[i][j];
      }
      if (rc.sign() < 0) entering = j;
    }
    if (entering < 0) return true;  // optimal
    int leave = -1;
    Rational best;
    for (int i = 0; i < tab.rows; ++i) {
      if (tab.t[i][entering].sign() <= 0) continue;
      Rational ratio = tab.t[i][tab.cols] / tab.t[i][entering];
      if (leave < 0 || ratio < best ||
          (ratio == best && tab.basis[i] < tab.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;  // unbounded along `entering`
    tab.pivot(leave, entering);
  }
}

}  // namespace

LpResult solve_lp_min(const LpProblem& p) {
  const int n = static_cast<int>(p.c.size());
  const int m = static_cast<int>(p.A.size());
  if (static_cast<int>(p.lower.size()) != n || static_cast<int>(p.b.size()) != m)
    throw std::invalid_argument("solve_lp_min: inconsistent problem sizes");
  for (const auto& row : p.A)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("solve_lp_min: ragged constraint matrix");

  // Shift x = y + lower with y >= 0, append one surplus variable per row,
  // then one artificial per row for phase 1.
  Tableau tab;
  tab.rows = m;
  tab.cols = n + m + m;
  tab.t.assign(m, std::vector<Rational>(tab.cols + 1, Rational(0)));
  tab.basis.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    Rational rhs = p.b[i];
    for (int j = 0; j < n; ++j) rhs -= p.A[i][j] * p.lower[j];
    bool flip = rhs.sign() < 0;
    for (int j = 0; j < n; ++j) tab.t[i][j] = flip ? -p.A[i][j] : p.A[i][j];
    tab.t[i][n + i] = Rational(flip ? 1 : -1);  // surplus
    tab.t[i][n + m + i] = Rational(1);          // artificial
    tab.t[i][tab.cols] = flip ? -rhs : rhs;
    tab.basis[i] = n + m + i;
  }

  std::vector<bool> allowed(tab.cols, true);
  std::vector<Rational> phase1(tab.cols, Rational(0));
  for (int i = 0; i < m; ++i) phase1[n + m + i] = Rational(1);
  int entering = -1;
  run_simplex(tab, phase1, allowed, entering);  // always bounded below by 0

  Rational infeas(0);
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= n + m) infeas += tab.t[i][tab.cols];
  if (!infeas.is_zero()) return {LpResult::Status::Infeasible, Rational(0), {}, {}};

  // Drive leftover artificials out of the basis where possible; rows that
  // cannot pivot are redundant and harmless (their artificial stays at 0 and
  // artificials are barred from re-entering below).
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n + m) continue;
    for (int j = 0; j < n + m; ++j) {
      if (!tab.t[i][j].is_zero()) {
        tab.pivot(i, j);
        break;
      }
    }
  }
  for (int j = n + m; j < tab.cols; ++j) allowed[j] = false;

  std::vector<Rational> phase2(tab.cols, Rational(0));
  for (int j = 0; j < n; ++j) phase2[j] = p.c[j];
  if (!run_simplex(tab, phase2, allowed, entering)) {
    LpResult res;
    res.status = LpResult::Status::Unbounded;
    std::vector<Rational> dir(tab.cols, Rational(0));
    dir[entering] = Rational(1);
    for (int i = 0; i < m; ++i) dir[tab.basis[i]] = -tab.t[i][entering];
    res.ray.assign(dir.begin(), dir.begin() + n);
    return res;
  }

  LpResult res;
  res.status = LpResult::Status::Optimal;
  std::vector<Rational> y(tab.cols, Rational(0));
  for (int i = 0; i < m; ++i) y[tab.basis[i]] = tab.t[i][tab.cols];
  res.point.resize(n);
  res.objective = Rational(0);
  for (int j = 0; j < n; ++j) {
    res.point[j] = y[j] + p.lower[j];
    res.objective += p.c[j] * res.point[j];
  }
  return res;
}

}  // namespace singlift
