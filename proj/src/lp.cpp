#include "pastures/lp.hpp"

#include <cstddef>

namespace pastures {

namespace {

// dense tableau for min cost.z, rows T z = rhs, z >= 0; rhs kept nonnegative
struct Tableau {
  int ncols = 0;
  std::vector<QVec> rows;  // each ncols + 1, rhs last
  QVec cost;               // ncols + 1, negated objective value last
  std::vector<int> basis;

  void pivot(int r, int c) {
    Rat d = rows[r][c];
    for (auto& v : rows[r]) v /= d;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rat f = rows[i][c];
      if (f == 0) continue;
      for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    Rat f = cost[c];
    if (f != 0)
      for (int j = 0; j <= ncols; ++j) cost[j] -= f * rows[r][j];
    basis[r] = c;
  }

  // Bland's rule; true when optimal, false when unbounded
  bool optimize() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < ncols; ++j)
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rat ratio = rows[i][ncols] / rows[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave]))
          {
            leave = static_cast<int>(i);
            best = ratio;
          }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void set_cost(const QVec& c) {
    cost.assign(ncols + 1, 0);
    for (int j = 0; j < ncols && j < static_cast<int>(c.size()); ++j)
      cost[j] = c[j];
    for (size_t r = 0; r < rows.size(); ++r) {
      Rat f = cost[basis[r]];
      if (f == 0) continue;
      for (int j = 0; j <= ncols; ++j) cost[j] -= f * rows[r][j];
    }
  }
};

// phase 1; returns false when the system is infeasible
bool phase1(int n, const std::vector<LinCon>& cons, Tableau& t) {
  int m = static_cast<int>(cons.size());
  int nslack = 0;
  for (const auto& c : cons)
    if (!c.eq) ++nslack;
  int art0 = 2 * n + nslack;
  t.ncols = art0 + m;
  t.rows.assign(m, QVec(t.ncols + 1, 0));
  t.basis.assign(m, 0);
  int slack = 0;
  for (int i = 0; i < m; ++i) {
    auto& row = t.rows[i];
    for (int j = 0; j < n && j < static_cast<int>(cons[i].a.size()); ++j) {
      row[j] = cons[i].a[j];
      row[n + j] = -cons[i].a[j];
    }
    if (!cons[i].eq) row[2 * n + slack++] = -1;
    row[t.ncols] = cons[i].b;
    if (row[t.ncols] < 0)
      for (auto& v : row) v = -v;
    row[art0 + i] = 1;
    t.basis[i] = art0 + i;
  }
  QVec c(t.ncols, 0);
  for (int i = 0; i < m; ++i) c[art0 + i] = 1;
  t.set_cost(c);
  t.optimize();  // bounded below by zero
  if (-t.cost[t.ncols] != 0) return false;

  // drive leftover artificials out of the basis or drop their rows
  for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
    if (t.basis[i] < art0) continue;
    int c2 = -1;
    for (int j = 0; j < art0; ++j)
      if (t.rows[i][j] != 0) {
        c2 = j;
        break;
      }
    if (c2 >= 0) {
      t.pivot(i, c2);
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }
  // bar artificial columns from later pivots
  for (auto& row : t.rows) {
    row.erase(row.begin() + art0, row.begin() + t.ncols);
    row.shrink_to_fit();
  }
  t.ncols = art0;
  return true;
}

} // namespace

LpResult lp_solve(int n, const std::vector<LinCon>& cons,
                  const QVec& objective, bool maximize) {
  Tableau t;
  if (!phase1(n, cons, t)) return LpResult{LpStatus::Infeasible, 0, {}};

  QVec c(t.ncols, 0);
  for (int j = 0; j < n && j < static_cast<int>(objective.size()); ++j) {
    c[j] = maximize ? -objective[j] : objective[j];
    c[n + j] = -c[j];
  }
  t.set_cost(c);
  if (!t.optimize()) return LpResult{LpStatus::Unbounded, 0, {}};

  QVec z(t.ncols, 0);
  for (size_t i = 0; i < t.rows.size(); ++i)
    z[t.basis[i]] = t.rows[i][t.ncols];
  LpResult res{LpStatus::Optimal, 0, QVec(n)};
  for (int j = 0; j < n; ++j) {
    res.x[j] = z[j] - z[n + j];
    if (j < static_cast<int>(objective.size()))
      res.value += objective[j] * res.x[j];
  }
  return res;
}

bool lp_feasible(int n, const std::vector<LinCon>& cons) {
  Tableau t;
  return phase1(n, cons, t);
}

} // namespace pastures
