#ifndef COFISO_GREEN_HPP
#define COFISO_GREEN_HPP

#include <vector>

#include "cofiso/element.hpp"

namespace cofiso {

// J coincides with D here, but both names stay addressable.
enum class GreenRelation { R, L, H, D, J };

// Decide whether a and b are related.
//   R: equal domains.  L: equal ranges.  H: both.
//   D = J: the excluded sets lie in one S_n-orbit.
// D/J enumerate S_n and so require n <= 8.
bool related(GreenRelation rel, const Element& a, const Element& b);

// The S_n-orbit of a set under set_image, deduplicated and sorted.
std::vector<FinPointSet> orbit(const FinPointSet& d);

// The least orbit member; constant on orbits, so two sets are in the same
// orbit iff their canonical forms are equal.
FinPointSet orbit_canonical(const FinPointSet& d);

// All elements D-related to a, sorted.  Size is n! * |orbit(excluded(a))|;
// the class is an antichain in the natural partial order.
std::vector<Element> d_class(const Element& a);

}  // namespace cofiso

#endif  // COFISO_GREEN_HPP
