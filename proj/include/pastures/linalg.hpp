#pragma once

#include <optional>
#include <vector>

#include "pastures/rational.hpp"

namespace pastures::linalg {

// Reduced row echelon form in place; returns the pivot column indices.
std::vector<int> rref(QMat& A);

int rank(QMat A);

// One solution of A x = b if the system is consistent, else nullopt.
// Free variables are set to zero.
std::optional<QVec> solve(const QMat& A, const QVec& b);

// Basis of the kernel {x : A x = 0}.
QMat nullspace(const QMat& A);

// Dimension of the affine hull of the given points; -1 when empty.
int affine_dim(const QMat& pts);

// Row space with membership queries. Rows are kept in reduced echelon form.
class RowSpace {
 public:
  RowSpace(int width, const QMat& rows);
  bool contains(QVec v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  const QMat& rows() const { return rows_; }

 private:
  int width_;
  QMat rows_;  // rref, zero rows dropped
  std::vector<int> pivots_;
};

} // namespace pastures::linalg
