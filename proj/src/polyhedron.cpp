#include "pastures/polyhedron.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <set>
#include <sstream>

#include "pastures/linalg.hpp"
#include "pastures/lp.hpp"

namespace pastures {

namespace {

std::vector<LinCon> as_cons(const Polyhedron& P) {
  std::vector<LinCon> cons;
  for (size_t i = 0; i < P.eq_a.size(); ++i)
    cons.push_back(LinCon{P.eq_a[i], P.eq_b[i], true});
  for (size_t i = 0; i < P.in_a.size(); ++i)
    cons.push_back(LinCon{P.in_a[i], P.in_b[i], false});
  return cons;
}

Rat dot(const QVec& a, const QVec& x) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

// positive scaling to a primitive integer vector (row and rhs together)
void make_primitive(QVec& a, Rat& b) {
  Int l = 1, g = 0;
  for (const auto& v : a)
    if (v != 0) l = lcm(l, Int(v.get_den()));
  if (b != 0) l = lcm(l, Int(b.get_den()));
  for (const auto& v : a)
    if (v != 0) g = gcd(g, Int(Rat(v * Rat(l)).get_num()));
  if (b != 0) g = gcd(g, Int(Rat(b * Rat(l)).get_num()));
  if (g == 0) return;
  Int ag = abs(g);
  Rat f = Rat(l) / Rat(ag);
  for (auto& v : a) v *= f;
  b *= f;
}

} // namespace

bool polyhedron_feasible(const Polyhedron& P) {
  return lp_feasible(P.n, as_cons(P));
}

AffineHull affine_hull(const Polyhedron& P) {
  AffineHull h;
  auto cons = as_cons(P);
  auto base = lp_solve(P.n, cons, QVec(P.n, 0), false);
  if (base.status != LpStatus::Optimal) return h;
  h.feasible = true;

  std::vector<QVec> points = {base.x};
  QMat rows = P.eq_a;
  QVec rhs = P.eq_b;
  for (size_t i = 0; i < P.in_a.size(); ++i) {
    bool moves = false;
    for (const auto& pt : points)
      if (dot(P.in_a[i], pt) != P.in_b[i]) {
        moves = true;
        break;
      }
    if (moves) continue;
    auto r = lp_solve(P.n, cons, P.in_a[i], true);
    if (r.status == LpStatus::Optimal && r.value == P.in_b[i]) {
      rows.push_back(P.in_a[i]);
      rhs.push_back(P.in_b[i]);
    } else if (r.status == LpStatus::Optimal) {
      points.push_back(r.x);
    }
  }

  // reduced echelon form of the tight system
  QMat aug = rows;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  auto pivots = linalg::rref(aug);
  for (size_t k = 0; k < pivots.size(); ++k) {
    QVec row(aug[k].begin(), aug[k].end() - 1);
    h.eq_a.push_back(std::move(row));
    h.eq_b.push_back(aug[k].back());
  }
  h.dim = P.n - static_cast<int>(pivots.size());
  return h;
}

int polyhedron_dim(const Polyhedron& P) { return affine_hull(P).dim; }

std::optional<QVec> feasible_point(const Polyhedron& P) {
  auto r = lp_solve(P.n, as_cons(P), QVec(P.n, 0), false);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.x;
}

bool canonicalize(Polyhedron& P) {
  auto hull = affine_hull(P);
  if (!hull.feasible) return false;

  // hoist implicit equalities, then clear their pivot columns from the rest
  std::vector<int> pivots;
  for (const auto& row : hull.eq_a) {
    int p = 0;
    while (row[p] == 0) ++p;
    pivots.push_back(p);
  }
  QMat in_a;
  QVec in_b;
  for (size_t i = 0; i < P.in_a.size(); ++i) {
    QVec a = P.in_a[i];
    Rat b = P.in_b[i];
    for (size_t k = 0; k < hull.eq_a.size(); ++k) {
      Rat f = a[pivots[k]];
      if (f == 0) continue;
      for (int j = 0; j < P.n; ++j) a[j] -= f * hull.eq_a[k][j];
      b -= f * hull.eq_b[k];
    }
    bool zero = std::all_of(a.begin(), a.end(),
                            [](const Rat& v) { return v == 0; });
    if (zero) continue;  // implied by the hull; b <= 0 on a feasible system
    make_primitive(a, b);
    in_a.push_back(std::move(a));
    in_b.push_back(b);
  }

  // dedupe identical rows
  std::vector<size_t> order(in_a.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::set<std::pair<QMat::value_type, Rat>> seen;
  QMat ded_a;
  QVec ded_b;
  for (size_t i = 0; i < in_a.size(); ++i)
    if (seen.insert({in_a[i], in_b[i]}).second) {
      ded_a.push_back(in_a[i]);
      ded_b.push_back(in_b[i]);
    }

  // drop inequalities implied by the others
  std::vector<bool> alive(ded_a.size(), true);
  for (size_t i = 0; i < ded_a.size(); ++i) {
    std::vector<LinCon> cons;
    for (size_t k = 0; k < hull.eq_a.size(); ++k)
      cons.push_back(LinCon{hull.eq_a[k], hull.eq_b[k], true});
    for (size_t j = 0; j < ded_a.size(); ++j)
      if (alive[j] && j != i) cons.push_back(LinCon{ded_a[j], ded_b[j], false});
    auto r = lp_solve(P.n, cons, ded_a[i], false);
    if (r.status == LpStatus::Optimal && r.value >= ded_b[i]) alive[i] = false;
  }

  P.eq_a.clear();
  P.eq_b.clear();
  for (size_t k = 0; k < hull.eq_a.size(); ++k) {
    QVec a = hull.eq_a[k];
    Rat b = hull.eq_b[k];
    make_primitive(a, b);
    P.eq_a.push_back(std::move(a));
    P.eq_b.push_back(b);
  }
  P.in_a.clear();
  P.in_b.clear();
  std::vector<std::pair<QMat::value_type, Rat>> rows;
  for (size_t i = 0; i < ded_a.size(); ++i)
    if (alive[i]) rows.push_back({ded_a[i], ded_b[i]});
  std::sort(rows.begin(), rows.end());
  for (auto& [a, b] : rows) {
    P.in_a.push_back(std::move(a));
    P.in_b.push_back(b);
  }
  return true;
}

std::vector<QVec> polyhedron_vertices(const Polyhedron& P) {
  QMat rows = P.eq_a;
  QVec rhs = P.eq_b;
  for (size_t i = 0; i < P.in_a.size(); ++i) {
    rows.push_back(P.in_a[i]);
    rhs.push_back(P.in_b[i]);
  }
  int m = static_cast<int>(rows.size());
  std::vector<QVec> out;
  if (P.n == 0) {
    if (polyhedron_feasible(P)) out.push_back({});
    return out;
  }
  std::vector<int> idx(P.n);
  auto try_set = [&](const std::vector<int>& sel) {
    QMat sys;
    QVec sys_b;
    for (int i : sel) {
      sys.push_back(rows[i]);
      sys_b.push_back(rhs[i]);
    }
    if (linalg::rank(sys) != P.n) return;
    auto x = linalg::solve(sys, sys_b);
    if (!x) return;
    for (size_t i = 0; i < P.eq_a.size(); ++i)
      if (dot(P.eq_a[i], *x) != P.eq_b[i]) return;
    for (size_t i = 0; i < P.in_a.size(); ++i)
      if (dot(P.in_a[i], *x) < P.in_b[i]) return;
    out.push_back(*x);
  };
  auto rec = [&](auto&& self, int start, int chosen) -> void {
    if (chosen == P.n) {
      std::vector<int> sel(idx.begin(), idx.begin() + chosen);
      try_set(sel);
      return;
    }
    for (int i = start; i <= m - (P.n - chosen); ++i) {
      idx[chosen] = i;
      self(self, i + 1, chosen + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string polyhedron_key(const Polyhedron& P) {
  std::ostringstream os;
  os << P.n << '|';
  for (size_t i = 0; i < P.eq_a.size(); ++i) {
    os << 'e';
    for (const auto& v : P.eq_a[i]) os << ' ' << rat_str(v);
    os << " = " << rat_str(P.eq_b[i]) << ';';
  }
  for (size_t i = 0; i < P.in_a.size(); ++i) {
    os << 'i';
    for (const auto& v : P.in_a[i]) os << ' ' << rat_str(v);
    os << " >= " << rat_str(P.in_b[i]) << ';';
  }
  return os.str();
}

std::string complex_report(const PolyhedralComplex& C) {
  std::ostringstream os;
  os << "dim " << C.dim << " cells " << C.cells.size() << "\n";
  for (size_t i = 0; i < C.cells.size(); ++i) {
    const auto& c = C.cells[i];
    os << "cell " << i << " dim " << C.cell_dims[i] << " eqs "
       << c.eq_a.size() << " ineqs " << c.in_a.size() << "\n";
    for (size_t k = 0; k < c.eq_a.size(); ++k) {
      os << "eq";
      for (const auto& v : c.eq_a[k]) os << ' ' << rat_str(v);
      os << " = " << rat_str(c.eq_b[k]) << "\n";
    }
    for (size_t k = 0; k < c.in_a.size(); ++k) {
      os << "ineq";
      for (const auto& v : c.in_a[k]) os << ' ' << rat_str(v);
      os << " >= " << rat_str(c.in_b[k]) << "\n";
    }
  }
  return os.str();
}

} // namespace pastures
