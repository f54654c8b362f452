#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pastures/linalg.hpp"
#include "pastures/matroid.hpp"
#include "pastures/polyhedron.hpp"

namespace pastures {

// Tropical Plucker vector in log scale: one finite rational per basis;
// non-bases carry the tropical zero implicitly.
struct PlueckerVector {
  Matroid M;
  std::map<Subset, Rat> val;  // keys are exactly M.bases
};

// File format: "pluecker <matroid-name>" then "<basis> : <rational>" lines.
// The value set must cover the basis set exactly.
PlueckerVector pluecker_parse(const std::string& text, const Matroid& M);
std::string pluecker_print(const PlueckerVector& d);

// Three-term relations of M: an (r-2)-subset S and i<j<k<l outside S give
// the terms (Sij,Skl), (Sik,Sjl), (Sil,Sjk); a term survives when both
// index sets are bases.
struct ThreeTermRelation {
  Subset s;
  int i, j, k, l;
  // surviving term t as basis pairs; empty pair slots are skipped
  std::vector<std::pair<Subset, Subset>> terms;
};
std::vector<ThreeTermRelation> three_term_relations(const Matroid& M);

// True iff in every relation either no term survives or the maximum of the
// surviving term values is attained at least twice. A single surviving
// term always fails.
bool check_tropical_pluecker(const PlueckerVector& d);

// Regular subdivision of the basis polytope: lower faces of the lift
// e_I -> (e_I, -value(I)); that sign makes the cells of every vector that
// satisfies the max-twice relations matroid polytopes. Cells are vertex
// sets of maximal faces, sorted; trivial means one cell with all bases.
struct Subdivision {
  std::vector<std::vector<Subset>> cells;
  bool trivial = false;
};
Subdivision regular_subdivision(const PlueckerVector& d);

// Affine fit value(I) = sum_{i in I} x_i + c. Loops never occur in bases;
// their slot carries no value (the +inf marker).
struct RescalingWitness {
  std::vector<std::optional<Rat>> x;  // length n, nullopt on loops
  Rat c;
};
std::optional<RescalingWitness> hyperplane_fit(const PlueckerVector& d);
PlueckerVector rescale(const PlueckerVector& d, const RescalingWitness& w);

struct MatroidalCheck {
  bool ok = false;
  std::vector<int> bad_cells;  // indices into the subdivision's cell list
  Subdivision subdivision;
};
MatroidalCheck subdivision_is_matroidal(const PlueckerVector& d);

// Ambient coordinate order for Dressian cells and lineality rows: the bases
// of M sorted as element tuples.
std::vector<Subset> dressian_coords(const Matroid& M);

// Space of all tropical Plucker vectors of M, as a cell cover in Q^#bases
// (coordinates ordered as in dressian_coords). One max-twice constraint
// set per relation; a relation with exactly one surviving term empties the
// whole space.
PolyhedralComplex dressian(const Matroid& M, int max_bases = 12,
                           long long cell_cap = 1000000);

// Rescaling orbit of the trivial valuation: span of the basis-incidence
// columns and the all-ones vector.
struct Lineality {
  linalg::RowSpace space;
  int dim;
};
Lineality lineality_space(const Matroid& M);

// Rigid iff every Dressian cell lies inside the lineality space (cells are
// cones, so cell containment is containment of the cell's linear span).
struct RigidityReport {
  bool rigid = false;
  int dressian_dim = -1;
  int lineality_dim = -1;
};
RigidityReport rigidity(const Matroid& M);

// "cells <N> trivial <yes|no>" then one line of bases per cell.
std::string subdivision_report(const Matroid& M, const Subdivision& s);

} // namespace pastures
