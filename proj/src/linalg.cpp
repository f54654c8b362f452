#include "pastures/linalg.hpp"

namespace pastures::linalg {

std::vector<int> rref(QMat& A) {
  std::vector<int> pivots;
  if (A.empty()) return pivots;
  int rows = static_cast<int>(A.size());
  int cols = static_cast<int>(A[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[r], A[p]);
    Rat inv = 1 / A[r][c];
    for (int j = c; j < cols; ++j) A[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(QMat A) { return static_cast<int>(rref(A).size()); }

std::optional<QVec> solve(const QMat& A, const QVec& b) {
  int rows = static_cast<int>(A.size());
  int cols = rows == 0 ? 0 : static_cast<int>(A[0].size());
  QMat aug(rows, QVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = A[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  QVec x(cols, 0);
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  return x;
}

QMat nullspace(const QMat& A) {
  QMat R = A;
  auto pivots = rref(R);
  int cols = A.empty() ? 0 : static_cast<int>(A[0].size());
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  QMat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, 0);
    v[free] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -R[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_dim(const QMat& pts) {
  if (pts.empty()) return -1;
  QMat diffs;
  for (size_t i = 1; i < pts.size(); ++i) {
    QVec d(pts[i].size());
    for (size_t j = 0; j < pts[i].size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return diffs.empty() ? 0 : rank(std::move(diffs));
}

RowSpace::RowSpace(int width, const QMat& rows) : width_(width) {
  QMat R = rows;
  pivots_ = rref(R);
  rows_.assign(R.begin(), R.begin() + pivots_.size());
}

bool RowSpace::contains(QVec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    Rat f = v[pivots_[k]];
    if (f == 0) continue;
    for (int j = 0; j < width_; ++j) v[j] -= f * rows_[k][j];
  }
  for (const auto& e : v)
    if (e != 0) return false;
  return true;
}

} // namespace pastures::linalg
