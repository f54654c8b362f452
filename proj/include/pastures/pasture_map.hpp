#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pastures/hom.hpp"
#include "pastures/pasture.hpp"

namespace pastures {

// Homomorphism between presented pastures, given by a signed monomial image
// per source generator.
struct PastureMap {
  std::string name;
  PasturePresentation source;
  PasturePresentation target;
  std::vector<Monomial> images;  // one per source generator, in target gens
};

// File format:
//   map <name>
//   source <pasture name or path>
//   target <pasture name or path>
//   T1 -> <signed monomial in target generators>
// The resolver turns a pasture token into a presentation.
PastureMap map_parse(
    const std::string& text,
    const std::function<PasturePresentation(const std::string&)>& resolve);

enum class MapStatus { Valid, BadLattice, BadNullset, Inconclusive };

struct MapCheck {
  MapStatus status;
  std::string detail;  // names the failing relation
};

// Lattice relations must map into the target lattice; nullset relations
// must map to sums the bounded nullset search verifies. Inconclusive is
// distinct from failure.
MapCheck validate_map(const PastureMap& f, const FusionParams& params = {});

// Identity map, for functoriality checks.
PastureMap identity_map(const PasturePresentation& P);

// Image of a source hom tuple under composition with f.
std::vector<int> compose_hom(const PastureMap& f, const FiniteField& F,
                             const std::vector<int>& target_images);

// Fiber partition of Hom(target, F) over Hom(source, F): base_points lists
// Hom(source, F) in enumeration order and fibers[i] the target homs mapping
// onto base_points[i]. Every member of Hom(target, F) lands in some fiber.
struct FiberReport {
  std::vector<std::vector<int>> base_points;
  std::vector<std::vector<std::vector<int>>> fibers;
};

FiberReport induced_map_fibers(const PastureMap& f, const FiniteField& F);

} // namespace pastures
