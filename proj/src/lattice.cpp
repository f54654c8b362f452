#include "pastures/lattice.hpp"

#include <algorithm>

namespace pastures {

namespace {

// g = gcd(a, b) = u a + v b
void ext_gcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

std::vector<Int> HermiteBasis::reduce(std::vector<Int> x) const {
  for (size_t j = 0; j < cols.size(); ++j) {
    int r = pivot_row[j];
    Int q = fdiv(x[r], cols[j][r]);
    if (q == 0) continue;
    for (int i = 0; i < m; ++i) x[i] -= q * cols[j][i];
  }
  return x;
}

bool HermiteBasis::contains(const std::vector<Int>& x) const {
  auto red = reduce(x);
  return std::all_of(red.begin(), red.end(),
                     [](const Int& v) { return v == 0; });
}

HermiteBasis hermite_basis(int m, const std::vector<std::vector<Int>>& gens) {
  std::vector<std::vector<Int>> work = gens;
  HermiteBasis hb;
  hb.m = m;
  for (int row = 0; row < m; ++row) {
    // combine all active columns into one with the gcd at this row
    size_t lead = hb.cols.size();
    size_t found = work.size();
    for (size_t j = 0; j < work.size(); ++j)
      if (work[j][row] != 0) {
        found = j;
        break;
      }
    if (found == work.size()) continue;
    std::swap(work[0], work[found]);
    (void)lead;
    for (size_t j = 1; j < work.size(); ++j) {
      if (work[j][row] == 0) continue;
      Int g, u, v;
      ext_gcd(work[0][row], work[j][row], g, u, v);
      Int s = work[0][row] / g, t = work[j][row] / g;
      for (int i = 0; i < m; ++i) {
        Int a = work[0][i], b = work[j][i];
        work[0][i] = u * a + v * b;
        work[j][i] = s * b - t * a;
      }
    }
    std::vector<Int> col = work[0];
    work.erase(work.begin());
    if (col[row] < 0)
      for (auto& e : col) e = -e;
    // entries of earlier basis columns at this row go into [0, pivot)
    for (auto& prev : hb.cols) {
      Int q = fdiv(prev[row], col[row]);
      if (q == 0) continue;
      for (int i = 0; i < m; ++i) prev[i] -= q * col[i];
    }
    hb.pivot_row.push_back(row);
    hb.cols.push_back(std::move(col));
  }
  return hb;
}

AbelianStructure smith_quotient(int m,
                                const std::vector<std::vector<Int>>& gens) {
  int g = static_cast<int>(gens.size());
  // A has the generators as columns
  std::vector<std::vector<Int>> A(m, std::vector<Int>(g, 0));
  for (int j = 0; j < g; ++j)
    for (int i = 0; i < m; ++i) A[i][j] = gens[j][i];

  int t = 0;
  std::vector<Int> diag;
  while (t < m && t < g) {
    // find a nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < m && pi < 0; ++i)
      for (int j = t; j < g; ++j)
        if (A[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(A[t], A[pi]);
    for (int i = 0; i < m; ++i) std::swap(A[i][t], A[i][pj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        Int g2, u, v;
        ext_gcd(A[t][t], A[i][t], g2, u, v);
        Int s = A[t][t] / g2, w = A[i][t] / g2;
        for (int j = t; j < g; ++j) {
          Int a = A[t][j], b = A[i][j];
          A[t][j] = u * a + v * b;
          A[i][j] = s * b - w * a;
        }
      }
      for (int j = t + 1; j < g; ++j) {
        if (A[t][j] == 0) continue;
        Int g2, u, v;
        ext_gcd(A[t][t], A[t][j], g2, u, v);
        Int s = A[t][t] / g2, w = A[t][j] / g2;
        for (int i = t; i < m; ++i) {
          Int a = A[i][t], b = A[i][j];
          A[i][t] = u * a + v * b;
          A[i][j] = s * b - w * a;
        }
        dirty = true;  // column ops may have refilled the pivot column
      }
    }
    // divisibility: fold any non-divisible entry into the pivot
    bool fixed = false;
    for (int i = t + 1; i < m && !fixed; ++i)
      for (int j = t + 1; j < g && !fixed; ++j)
        if (A[i][j] % A[t][t] != 0) {
          for (int jj = t; jj < g; ++jj) A[t][jj] += A[i][jj];
          fixed = true;
        }
    if (fixed) continue;  // redo elimination at the same t
    if (A[t][t] < 0)
      for (int j = t; j < g; ++j) A[t][j] = -A[t][j];
    diag.push_back(A[t][t]);
    ++t;
  }

  AbelianStructure s;
  s.free_rank = m - static_cast<int>(diag.size());
  for (const auto& d : diag)
    if (d > 1) s.torsion.push_back(d);
  return s;
}

} // namespace pastures
