#pragma once

#include <string>
#include <vector>

#include "pastures/finite_field.hpp"
#include "pastures/pasture.hpp"

namespace pastures {

// All homomorphisms P -> F as tuples of nonzero field element codes, one
// per generator, sorted lexicographically. A tuple qualifies when every
// lattice relation evaluates to 1 (sign mapping to -1) and every nullset
// relation sums to 0.
std::vector<std::vector<int>> enumerate_homs(const PasturePresentation& P,
                                             const FiniteField& F);

bool check_hom(const PasturePresentation& P, const std::vector<int>& images,
               const FiniteField& F);

// "T1=2 T2=6"; "(trivial)" for generator-free presentations.
std::string hom_str(const PasturePresentation& P, const FiniteField& F,
                    const std::vector<int>& images);

struct ProfileRow {
  int q;
  long long count;
};

struct Profile {
  std::vector<ProfileRow> rows;
  double growth_exponent;  // least-squares slope of log(count+1) vs log(q)
};

Profile point_count_profile(const PasturePresentation& P, std::vector<int> qs);

} // namespace pastures
