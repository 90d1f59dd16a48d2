#include "cofiso/green.hpp"

#include <algorithm>

namespace cofiso {

bool related(GreenRelation rel, const Element& a, const Element& b) {
  if (a.dimension() != b.dimension())
    throw DimensionError("related: dimension mismatch");
  switch (rel) {
    case GreenRelation::R:
      return a.excluded() == b.excluded();
    case GreenRelation::L:
      return a.range_excluded() == b.range_excluded();
    case GreenRelation::H:
      return a.excluded() == b.excluded() &&
             a.range_excluded() == b.range_excluded();
    case GreenRelation::D:
    case GreenRelation::J:
      return orbit_canonical(a.excluded()) == orbit_canonical(b.excluded());
  }
  throw Error("related: unknown relation");
}

std::vector<FinPointSet> orbit(const FinPointSet& d) {
  if (d.empty()) return {d};
  std::vector<FinPointSet> out;
  for (const Perm& tau : all_perms(d.dimension()))
    out.push_back(set_image(d, tau));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FinPointSet orbit_canonical(const FinPointSet& d) {
  return orbit(d).front();
}

std::vector<Element> d_class(const Element& a) {
  std::vector<Element> out;
  const std::vector<FinPointSet> orb = orbit(a.excluded());
  for (const Perm& sigma : all_perms(a.dimension()))
    for (const FinPointSet& d : orb) out.emplace_back(sigma, d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cofiso
