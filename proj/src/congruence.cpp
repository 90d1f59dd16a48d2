#include "cofiso/congruence.hpp"

#include <ostream>

namespace cofiso {

std::ostream& operator<<(std::ostream& os, const SemidirectPair& p) {
  return os << '(' << p.group_part << ',' << p.lattice_part << ')';
}

bool cmg_related(const Element& a, const Element& b) {
  if (a.dimension() != b.dimension())
    throw DimensionError("cmg_related: dimension mismatch");
  return a.sigma() == b.sigma();
}

Perm quotient_project(const Element& a) { return a.sigma(); }

Element star_mult(const Element& u, const Element& v) {
  if (!u.excluded().empty() || !v.excluded().empty())
    throw NotMaximalError("star_mult: arguments must be maximal");
  return max_above(multiply(u, v));
}

Element f_map(const Element& t, const Element& idem) {
  if (!t.excluded().empty())
    throw NotMaximalError("f_map: conjugator must be maximal");
  if (!is_idempotent(idem))
    throw NotIdempotentError("f_map: argument is not idempotent");
  return multiply(multiply(t, idem), inverse(t));
}

Element h_map(const Perm& sigma, const Element& idem) {
  if (!is_idempotent(idem))
    throw NotIdempotentError("h_map: argument is not idempotent");
  if (sigma.degree() != idem.dimension())
    throw DimensionError("h_map: dimension mismatch");
  return Element(Perm::identity(idem.dimension()),
                 set_image(idem.excluded(), sigma));
}

SemidirectPair encode(const Element& a) {
  return SemidirectPair{a.sigma(), a.range_excluded()};
}

Element decode(const SemidirectPair& p) {
  return Element(p.group_part,
                 set_image(p.lattice_part, invert(p.group_part)));
}

SemidirectPair semidirect_multiply(const SemidirectPair& a,
                                   const SemidirectPair& b) {
  if (a.group_part.degree() != b.group_part.degree())
    throw DimensionError("semidirect_multiply: dimension mismatch");
  return SemidirectPair{
      compose(a.group_part, b.group_part),
      set_union(set_image(a.lattice_part, b.group_part), b.lattice_part)};
}

bool e_unitary_check(const Element& idem, const Element& s) {
  if (!is_idempotent(idem))
    throw NotIdempotentError("e_unitary_check: first argument not idempotent");
  return !natural_leq(idem, s) || is_idempotent(s);
}

}  // namespace cofiso
