#ifndef COFISO_ELEMENT_HPP
#define COFISO_ELEMENT_HPP

#include <iosfwd>
#include <vector>

#include "cofiso/errors.hpp"
#include "cofiso/perm.hpp"
#include "cofiso/point.hpp"

namespace cofiso {

// A cofinite partial isometry of N^n in normal form: the coordinate
// permutation `sigma` restricted to N^n minus the finite set `excluded`.
// The normal form is unique, so equality of elements is structural.
//
// Storage is domain-complement form; the range complement is the sigma-image
// of `excluded` and is exposed via range_excluded().
class Element {
 public:
  Element(Perm sigma, FinPointSet excluded);

  int dimension() const { return sigma_.degree(); }
  const Perm& sigma() const { return sigma_; }

  // Complement of the domain.
  const FinPointSet& excluded() const { return excluded_; }

  // Complement of the range: excluded * sigma.
  FinPointSet range_excluded() const { return set_image(excluded_, sigma_); }

  friend bool operator==(const Element& a, const Element& b) {
    return a.sigma_ == b.sigma_ && a.excluded_ == b.excluded_;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }
  friend bool operator<(const Element& a, const Element& b) {
    if (a.sigma_ != b.sigma_) return a.sigma_ < b.sigma_;
    return a.excluded_ < b.excluded_;
  }

 private:
  Perm sigma_;
  FinPointSet excluded_;
};

std::ostream& operator<<(std::ostream& os, const Element& a);

// The unit: the identity map of N^n.
Element identity_element(int n);

// Composition of partial maps, in normal form:
//   (s,D) * (t,E) = (st, D u E s^-1).
Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) {
  return multiply(a, b);
}

// The unique inverse: (s,D)^-1 = (s^-1, D s).
Element inverse(const Element& a);

// Idempotents are exactly the restrictions of the identity map.
bool is_idempotent(const Element& a);

// Natural partial order: a <= b iff a = b e for some idempotent e;
// equivalently sigma_a = sigma_b and excluded(a) contains excluded(b).
bool natural_leq(const Element& a, const Element& b);

// a = unit * left = right * unit, with left = a^-1 a and right = a a^-1.
// The decomposition is unique.
struct Factorization {
  Element unit;
  Element left;
  Element right;
};
Factorization factorize(const Element& a);

// The isomorphism from the idempotent semilattice to finite point sets under
// union: an idempotent maps to its excluded set.
FinPointSet semilattice_iso(const Element& idem);

// In the idempotent semilattice, `upper` covers `lower` iff lower < upper
// and the excluded sets differ by exactly one point.
bool covers(const Element& lower, const Element& upper);

// The unique maximal element above a: its unit part (sigma_a, {}).
Element max_above(const Element& a);

// All elements (sigma, D) with D inside the box {1..m}^n; closed under
// multiplication and inversion because boxes are invariant under coordinate
// permutations.  Enumeration order: sigma major, then subset bitmask order.
std::vector<Element> box_submonoid(int n, int m);

}  // namespace cofiso

#endif  // COFISO_ELEMENT_HPP
