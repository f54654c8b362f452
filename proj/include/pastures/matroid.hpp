#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pastures {

// Subset of the ground set {1..n}, bit i-1 for element i. n <= 64.
using Subset = std::uint64_t;

struct Matroid {
  std::string name;
  int n = 0;
  int r = 0;
  std::vector<Subset> bases;  // sorted, distinct
};

// Basis exchange over all pairs, O(|bases|^2 r). On failure *why names a
// violating pair and element.
bool exchange_valid(int n, int r, const std::vector<Subset>& bases,
                    std::string* why = nullptr);

// Validates cardinalities, range, nonemptiness and the exchange axiom.
Matroid matroid_from_bases(std::string name, int n, int r,
                           std::vector<Subset> bases);

Matroid uniform_matroid(int r, int n);
Matroid fano_matroid();

// True iff the supports of a set of equal-weight 0/1 vertices satisfy the
// exchange axiom; the cells of basis polytope subdivisions are tested here.
bool cell_is_matroid(int n, int r, const std::vector<Subset>& vertex_supports);

// Minor by deleting D and contracting C (C independent, D and C disjoint).
// Ground elements outside D and C are relabeled order-preservingly onto an
// initial segment; old_of_new[i] is the original label of new element i+1.
struct MinorResult {
  Matroid m;
  std::vector<int> old_of_new;
};
MinorResult minor(const Matroid& M, Subset del, Subset contract);

bool is_basis(const Matroid& M, Subset I);

// "134" for n <= 9, comma-separated labels otherwise.
std::string subset_str(Subset I, int n);
Subset subset_parse(const std::string& s, int n);

Matroid matroid_parse(const std::string& text);
std::string matroid_print(const Matroid& M);

// U<r><n> (single digits) and F7.
std::optional<Matroid> builtin_matroid(const std::string& name);

} // namespace pastures
