#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pastures/rational.hpp"

namespace pastures {

// H-description over Q^n: equalities a.x = b and inequalities a.x >= b.
// Canonical form keeps the equality block in reduced echelon form, reduces
// every inequality modulo it, scales rows to primitive integer vectors
// (positive scaling only, so inequality orientation survives) and sorts.
struct Polyhedron {
  int n = 0;
  QMat eq_a;
  QVec eq_b;
  QMat in_a;
  QVec in_b;
};

// Returns false when canonicalization already proves infeasibility
// (contradictory equality row or inequality reduced to 0 >= positive).
bool canonicalize(Polyhedron& P);

bool polyhedron_feasible(const Polyhedron& P);

// Affine hull as an equality system, found by exact implicit-equality
// detection: an inequality whose slack cannot move off b is tightened.
struct AffineHull {
  bool feasible = false;
  QMat eq_a;   // rref rows
  QVec eq_b;
  int dim = -1;  // n - rank when feasible
};

AffineHull affine_hull(const Polyhedron& P);

// Dimension of the affine hull of the feasible set; -1 when infeasible.
int polyhedron_dim(const Polyhedron& P);

std::optional<QVec> feasible_point(const Polyhedron& P);

// All vertices (0-faces), exact, by enumerating maximal-rank active sets.
// Intended for small ambient dimension; returns sorted distinct points.
std::vector<QVec> polyhedron_vertices(const Polyhedron& P);

// Deterministic one-line key of a canonical polyhedron, used to deduplicate
// and order cells.
std::string polyhedron_key(const Polyhedron& P);

struct PolyhedralComplex {
  int n = 0;
  std::vector<Polyhedron> cells;   // canonical, sorted by key
  std::vector<int> cell_dims;
  int dim = -1;                    // max cell dimension, -1 when empty
};

// "dim <D> cells <N>" then one block per cell:
// "cell <id> dim <d> eqs <e> ineqs <i>" followed by constraint rows.
std::string complex_report(const PolyhedralComplex& C);

} // namespace pastures
