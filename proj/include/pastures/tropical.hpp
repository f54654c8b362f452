#pragma once

#include <vector>

#include "pastures/pasture.hpp"
#include "pastures/pasture_map.hpp"
#include "pastures/polyhedron.hpp"

namespace pastures {

// Hom(P, T) in log coordinates x in Q^n, one coordinate per generator; the
// sign has log-value 0 and drops out. Lattice relations become equalities.
// Every nullset relation contributes one cell per choice of the two terms
// attaining the maximum; the returned cells form a cover of Hom(P, T), not
// a common refinement. Cells are canonical, deduplicated and sorted.
PolyhedralComplex trop_complex(const PasturePresentation& P,
                               long long cell_cap = 1000000);

// Exact membership: all lattice equalities hold and each relation's maximum
// is attained at least twice.
bool trop_contains(const PasturePresentation& P, const QVec& x);

// Max dimension of the preimage of x under the induced map
// Hom(target, T) -> Hom(source, T); -1 when the preimage is empty
// (in particular whenever x lies outside Hom(source, T)).
int trop_fiber_dim(const PastureMap& f, const QVec& x);

} // namespace pastures
