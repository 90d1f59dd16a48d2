#include "cofiso/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace cofiso {

Perm::Perm(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw RangeError("permutation of an empty set");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  map_.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw RangeError("permutation images must be a bijection of 1..n");
    seen[static_cast<std::size_t>(v - 1)] = true;
    map_.push_back(v - 1);
  }
}

Perm Perm::identity(int n) {
  if (n < 1) throw RangeError("permutation of an empty set");
  Perm p;
  p.map_.resize(static_cast<std::size_t>(n));
  std::iota(p.map_.begin(), p.map_.end(), 0);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Perm::images() const {
  std::vector<int> out;
  out.reserve(map_.size());
  for (int v : map_) out.push_back(v + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Perm& sigma) {
  os << '[';
  const auto images = sigma.images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i > 0) os << ',';
    os << images[i];
  }
  return os << ']';
}

Perm compose(const Perm& sigma, const Perm& tau) {
  if (sigma.degree() != tau.degree())
    throw DimensionError("compose: degree mismatch");
  Perm out;
  out.map_.reserve(sigma.map_.size());
  for (int v : sigma.map_)
    out.map_.push_back(tau.map_[static_cast<std::size_t>(v)]);
  return out;
}

Perm invert(const Perm& sigma) {
  Perm out;
  out.map_.resize(sigma.map_.size());
  for (std::size_t i = 0; i < sigma.map_.size(); ++i)
    out.map_[static_cast<std::size_t>(sigma.map_[i])] = static_cast<int>(i);
  return out;
}

Point act(const Point& p, const Perm& sigma) {
  if (p.dimension() != sigma.degree())
    throw DimensionError("act: dimension mismatch");
  std::vector<std::int64_t> out(p.coords().size());
  for (int i = 0; i < p.dimension(); ++i)
    out[static_cast<std::size_t>(sigma.map_[static_cast<std::size_t>(i)])] =
        p[i];
  return Point(std::move(out));
}

FinPointSet set_image(const FinPointSet& s, const Perm& sigma) {
  std::vector<Point> pts;
  pts.reserve(s.size());
  for (const Point& p : s) pts.push_back(act(p, sigma));
  return FinPointSet(std::move(pts));
}

std::vector<Perm> all_perms(int n) {
  if (n < 2 || n > 8) throw RangeError("all_perms: n must be in 2..8");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace cofiso
