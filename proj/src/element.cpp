#include "cofiso/element.hpp"

#include <ostream>

namespace cofiso {

Element::Element(Perm sigma, FinPointSet excluded)
    : sigma_(std::move(sigma)), excluded_(std::move(excluded)) {
  if (sigma_.degree() < 2)
    throw RangeError("elements require n >= 2");
  if (!excluded_.empty() && excluded_.dimension() != sigma_.degree())
    throw DimensionError("element: permutation and excluded set dimensions differ");
}

std::ostream& operator<<(std::ostream& os, const Element& a) {
  return os << '(' << a.sigma() << '|' << a.excluded() << ')';
}

Element identity_element(int n) {
  return Element(Perm::identity(n), FinPointSet{});
}

Element multiply(const Element& a, const Element& b) {
  if (a.dimension() != b.dimension())
    throw DimensionError("multiply: dimension mismatch");
  return Element(compose(a.sigma(), b.sigma()),
                 set_union(a.excluded(),
                           set_image(b.excluded(), invert(a.sigma()))));
}

Element inverse(const Element& a) {
  return Element(invert(a.sigma()), a.range_excluded());
}

bool is_idempotent(const Element& a) { return a.sigma().is_identity(); }

bool natural_leq(const Element& a, const Element& b) {
  if (a.dimension() != b.dimension())
    throw DimensionError("natural_leq: dimension mismatch");
  return a.sigma() == b.sigma() && is_subset(b.excluded(), a.excluded());
}

Factorization factorize(const Element& a) {
  const Perm id = Perm::identity(a.dimension());
  return Factorization{Element(a.sigma(), FinPointSet{}),
                       Element(id, a.range_excluded()),
                       Element(id, a.excluded())};
}

FinPointSet semilattice_iso(const Element& idem) {
  if (!is_idempotent(idem))
    throw NotIdempotentError("semilattice_iso: argument is not idempotent");
  return idem.excluded();
}

bool covers(const Element& lower, const Element& upper) {
  if (!is_idempotent(lower) || !is_idempotent(upper))
    throw NotIdempotentError("covers: arguments must be idempotent");
  return natural_leq(lower, upper) && lower != upper &&
         lower.excluded().size() == upper.excluded().size() + 1;
}

Element max_above(const Element& a) {
  return Element(a.sigma(), FinPointSet{});
}

std::vector<Element> box_submonoid(int n, int m) {
  const FinPointSet box = box_points(n, m);
  if (box.size() > 20)
    throw SliceTooLarge("box_submonoid: box has more than 20 points");
  const std::vector<Perm> perms = all_perms(n);
  const std::size_t subsets = std::size_t{1} << box.size();
  if (perms.size() * subsets > 1000000)
    throw SliceTooLarge("box_submonoid: more than 10^6 elements");

  std::vector<Element> out;
  out.reserve(perms.size() * subsets);
  const std::vector<FinPointSet> ds = all_subsets(box);
  for (const Perm& sigma : perms)
    for (const FinPointSet& d : ds) out.emplace_back(sigma, d);
  return out;
}

}  // namespace cofiso
