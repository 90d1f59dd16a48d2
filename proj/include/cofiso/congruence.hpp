#ifndef COFISO_CONGRUENCE_HPP
#define COFISO_CONGRUENCE_HPP

#include <iosfwd>

#include "cofiso/element.hpp"

namespace cofiso {

// Image of an element under the semidirect-product isomorphism: the unit
// part together with the complement of the range (the excluded set of
// a^-1 a, i.e. excluded(a) * sigma_a).
struct SemidirectPair {
  Perm group_part;
  FinPointSet lattice_part;

  friend bool operator==(const SemidirectPair& a, const SemidirectPair& b) {
    return a.group_part == b.group_part && a.lattice_part == b.lattice_part;
  }
  friend bool operator!=(const SemidirectPair& a, const SemidirectPair& b) {
    return !(a == b);
  }
  friend bool operator<(const SemidirectPair& a, const SemidirectPair& b) {
    if (a.group_part != b.group_part) return a.group_part < b.group_part;
    return a.lattice_part < b.lattice_part;
  }
};

std::ostream& operator<<(std::ostream& os, const SemidirectPair& p);

// Minimum group congruence: a and b are related iff their unit parts agree.
bool cmg_related(const Element& a, const Element& b);

// Projection onto the quotient group, which is S_n.
Perm quotient_project(const Element& a);

// Group multiplication on maximal elements: u * v = max_above(uv).
// Arguments must have empty excluded sets.
Element star_mult(const Element& u, const Element& v);

// Conjugation of an idempotent by a maximal element: t e t^-1.
Element f_map(const Element& t, const Element& idem);

// Conjugation e |-> sigma^-1 e sigma, an automorphism of the idempotent
// semilattice; at the excluded-set level it is set_image by sigma.
Element h_map(const Perm& sigma, const Element& idem);

SemidirectPair encode(const Element& a);
Element decode(const SemidirectPair& p);

// The product the encoding transports multiplication to:
//   (s,F) o (t,G) = (st, F t u G).
SemidirectPair semidirect_multiply(const SemidirectPair& a,
                                   const SemidirectPair& b);

// The E-unitary implication: whenever idem <= s, s must be idempotent.
// Returns the truth of the implication (true when idem and s are unrelated).
bool e_unitary_check(const Element& idem, const Element& s);

}  // namespace cofiso

#endif  // COFISO_CONGRUENCE_HPP
