#pragma once

#include <string>
#include <vector>

#include "pastures/lattice.hpp"
#include "pastures/rational.hpp"

namespace pastures {

// Signed monomial in the generators of a presentation.
struct Monomial {
  int sign = 1;  // +1 or -1
  std::vector<long long> exps;

  bool operator==(const Monomial&) const = default;
};

// Formal sum of signed monomials declared to vanish. Terms are kept exactly
// as written (sorted for syntactic equality, exponents never reduced).
struct NullsetRelation {
  std::vector<Monomial> terms;

  bool operator==(const NullsetRelation&) const = default;
};

// Finitely presented pasture. The unit group is Z^{n+1}/L with the last
// coordinate the exponent of -1; L always contains 2*e_sign. Two-term
// relations are folded into L as identifications and also kept in
// relations, so homomorphism checks see them directly.
struct PasturePresentation {
  std::string name;
  std::vector<std::string> gens;
  std::vector<std::vector<Int>> lattice_gens;  // vectors in Z^{n+1}
  std::vector<NullsetRelation> relations;
  HermiteBasis lat;  // cached normal form of lattice_gens

  int n() const { return static_cast<int>(gens.size()); }
};

// Element in canonical form: the unique coset representative of its
// exponent vector modulo L. rep has length n+1; rep[n] in {0,1} is the
// sign exponent unless the presentation identifies 1 = -1.
struct PastureElement {
  bool zero = false;
  std::vector<Int> rep;

  bool operator==(const PastureElement&) const = default;
};

// Grammar:
//   presentation := "F1pm(" gen_list? "|" relation_list ")"
//   gen_list     := ident ("," ident)*
//   relation_list:= relation ("," relation)* | empty
//   relation     := term (("+"|"-") term)*
//   term         := "1" | monomial
//   monomial     := factor ("*" factor)*
//   factor       := ident ("^" integer)?
// Whitespace is insignificant; a leading "-" on the first term is allowed.
// Rejects single-term relations (they would put a unit in the nullset).
PasturePresentation parse_presentation(const std::string& text,
                                       const std::string& name = "pasture");

// Built-in presentations: F1pm, K, F2, F3, F5, D, H, G, U.
PasturePresentation catalog(const std::string& name);
const std::vector<std::string>& catalog_names();

PastureElement pe_zero();
PastureElement pe_one(const PasturePresentation& P);
PastureElement pe_monomial(const PasturePresentation& P, const Monomial& m);
PastureElement pe_mul(const PasturePresentation& P, const PastureElement& a,
                      const PastureElement& b);
PastureElement pe_neg(const PasturePresentation& P, const PastureElement& a);
PastureElement pe_inv(const PasturePresentation& P, const PastureElement& a);
std::string pe_str(const PasturePresentation& P, const PastureElement& a);

AbelianStructure unit_group_structure(const PasturePresentation& P);

// Bounded decision procedure for membership of a formal sum in the nullset.
enum class Trilean { Yes, No, Unknown };

struct FusionParams {
  int depth = 4;          // fusion closure rounds
  int max_terms = 8;      // longest retained relation
  int max_relations = 20000;
};

// Yes: derivable from the generating relations by unit scaling, fusion and
// splitting into vanishing parts. No: refuted by term count, by unique
// additive inverses, or by a homomorphism into a small finite field.
// Unknown: the bounded search was exhausted.
Trilean nullset_contains(const PasturePresentation& P, const NullsetRelation& rel,
                         const FusionParams& params = {});

} // namespace pastures
