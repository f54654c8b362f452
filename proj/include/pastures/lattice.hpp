#pragma once

#include <vector>

#include "pastures/rational.hpp"

namespace pastures {

// Column-style Hermite normal form of an integer lattice in Z^m.
// Columns are in echelon form: pivot rows strictly increase and each
// column is zero above its pivot; pivot entries are positive.
struct HermiteBasis {
  int m = 0;
  std::vector<std::vector<Int>> cols;
  std::vector<int> pivot_row;

  // Unique coset representative: after reduction, 0 <= x[r] < pivot value
  // at every pivot row r. Cosets are equal iff representatives are equal.
  std::vector<Int> reduce(std::vector<Int> x) const;
  bool contains(const std::vector<Int>& x) const;
};

HermiteBasis hermite_basis(int m, const std::vector<std::vector<Int>>& gens);

// Z^m / <gens> as Z^free_rank plus cyclic factors in a divisibility chain.
struct AbelianStructure {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
};

AbelianStructure smith_quotient(int m, const std::vector<std::vector<Int>>& gens);

} // namespace pastures
