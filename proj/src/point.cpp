#include "cofiso/point.hpp"

#include <algorithm>
#include <ostream>

namespace cofiso {

Point::Point(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2)
    throw DimensionError("points of N^n require n >= 2");
  for (std::int64_t c : coords_)
    if (c < 1) throw RangeError("coordinates must be positive");
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (int i = 0; i < p.dimension(); ++i) {
    if (i > 0) os << ',';
    os << p[i];
  }
  return os << ')';
}

FinPointSet::FinPointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (const Point& p : points_)
    if (p.dimension() != points_.front().dimension())
      throw DimensionError("point set mixes dimensions");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool FinPointSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::ostream& operator<<(std::ostream& os, const FinPointSet& s) {
  os << '{';
  bool first = true;
  for (const Point& p : s) {
    if (!first) os << ';';
    first = false;
    os << p;
  }
  return os << '}';
}

std::int64_t squared_distance(const Point& p, const Point& q) {
  if (p.dimension() != q.dimension())
    throw DimensionError("squared_distance: dimension mismatch");
  std::int64_t sum = 0;
  for (int i = 0; i < p.dimension(); ++i) {
    std::int64_t d = p[i] - q[i];
    sum += d * d;
  }
  return sum;
}

FinPointSet box_points(int n, int m) {
  if (n < 2) throw DimensionError("box_points: n >= 2 required");
  if (m < 1) throw RangeError("box_points: m >= 1 required");

  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(m);
    if (total > (std::size_t{1} << 24))
      throw RangeError("box_points: box too large");
  }

  std::vector<Point> pts;
  pts.reserve(total);
  std::vector<std::int64_t> odo(static_cast<std::size_t>(n), 1);
  for (;;) {
    pts.emplace_back(odo);
    int i = n - 1;
    while (i >= 0 && odo[static_cast<std::size_t>(i)] == m) {
      odo[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++odo[static_cast<std::size_t>(i)];
  }
  return FinPointSet(std::move(pts));  // odometer order is already canonical
}

FinPointSet set_union(const FinPointSet& a, const FinPointSet& b) {
  if (!a.empty() && !b.empty() && a.dimension() != b.dimension())
    throw DimensionError("set_union: dimension mismatch");
  std::vector<Point> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return FinPointSet(std::move(merged));
}

bool is_subset(const FinPointSet& sub, const FinPointSet& sup) {
  if (!sub.empty() && !sup.empty() && sub.dimension() != sup.dimension())
    throw DimensionError("is_subset: dimension mismatch");
  return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

std::vector<FinPointSet> all_subsets(const FinPointSet& s) {
  if (s.size() > 20) throw SliceTooLarge("all_subsets: more than 20 points");
  const std::size_t count = std::size_t{1} << s.size();
  std::vector<FinPointSet> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask & (std::size_t{1} << i)) pts.push_back(s.points()[i]);
    out.emplace_back(std::move(pts));
  }
  return out;
}

}  // namespace cofiso
