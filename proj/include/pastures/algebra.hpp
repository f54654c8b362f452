#pragma once

#include <map>
#include <string>
#include <vector>

#include "pastures/finite_field.hpp"
#include "pastures/pasture.hpp"

namespace pastures {

struct FieldSpec {
  enum Kind { QQ, Finite } kind = QQ;
  int q = 0;  // prime power when finite
};

// Polynomial with integer coefficients in the variables T1,U1,...,Tn,Un
// (T,U when n = 1). Terms are sorted by total degree then lexicographically,
// both descending; the leading coefficient is kept positive.
struct Poly {
  std::vector<std::pair<std::vector<int>, long long>> terms;

  bool operator==(const Poly&) const = default;
};

std::string poly_str(const Poly& p, const std::vector<std::string>& vars);

// Laurent-style presentation of the associated algebra: inverse variables
// Ui with Ti*Ui - 1, one binomial per normal-form lattice basis vector
// (T^{a+} - (-1)^s T^{a-}), and one collected polynomial per nullset
// relation. Zero polynomials are dropped and duplicates removed.
struct AlgebraPresentation {
  FieldSpec field;
  int n = 0;
  std::vector<std::string> vars;
  std::vector<Poly> relations;
};

AlgebraPresentation associated_algebra(const PasturePresentation& P,
                                       FieldSpec field);

// Dialects: generic  "ring QQ[T,U]; ideal (T*U-1, 2*T-1);"
//           m2       "R = QQ[T,U]; I = ideal(T*U-1, 2*T-1);"
//           singular "ring R = 0, (T,U), dp; ideal I = T*U-1, 2*T-1;"
// Output is byte-stable for equal inputs.
std::string export_cas(const AlgebraPresentation& A, const std::string& dialect);

// Brute-force solution count of the algebra over F (Ui forced to Ti^{-1})
// against the hom enumeration; agree means the two point sets coincide
// under Ti = image of the i-th generator.
struct Crosscheck {
  long long algebra_points = 0;
  long long hom_points = 0;
  bool agree = false;
};

Crosscheck variety_points_crosscheck(const PasturePresentation& P,
                                     const FiniteField& F);

} // namespace pastures
