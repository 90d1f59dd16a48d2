#ifndef COFISO_POINT_HPP
#define COFISO_POINT_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cofiso/errors.hpp"

namespace cofiso {

// A lattice point of N^n.  Coordinates are positive integers, n >= 2.
// Immutable after construction.
class Point {
 public:
  explicit Point(std::vector<std::int64_t> coords);
  Point(std::initializer_list<std::int64_t> coords)
      : Point(std::vector<std::int64_t>(coords)) {}

  int dimension() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  // 0-based access.
  std::int64_t operator[](int i) const {
    return coords_[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const Point& a, const Point& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  // Lexicographic on the coordinate sequence; the canonical order used
  // everywhere points are sorted or serialized.
  friend bool operator<(const Point& a, const Point& b) {
    return a.coords_ < b.coords_;
  }

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

// A finite set of points of a common dimension, stored sorted (lexicographic
// on coordinates) and without duplicates.  The empty set is compatible with
// every dimension; dimension() reports 0 for it.
class FinPointSet {
 public:
  FinPointSet() = default;
  explicit FinPointSet(std::vector<Point> points);
  FinPointSet(std::initializer_list<Point> points)
      : FinPointSet(std::vector<Point>(points)) {}

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  int dimension() const {
    return points_.empty() ? 0 : points_.front().dimension();
  }

  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const Point& p) const;

  friend bool operator==(const FinPointSet& a, const FinPointSet& b) {
    return a.points_ == b.points_;
  }
  friend bool operator!=(const FinPointSet& a, const FinPointSet& b) {
    return !(a == b);
  }
  friend bool operator<(const FinPointSet& a, const FinPointSet& b) {
    return a.points_ < b.points_;
  }

 private:
  std::vector<Point> points_;
};

std::ostream& operator<<(std::ostream& os, const FinPointSet& s);

// Squared Euclidean distance; kept squared so every comparison stays in
// integer arithmetic.
std::int64_t squared_distance(const Point& p, const Point& q);

// All m^n points of the box {1..m}^n in canonical order.
FinPointSet box_points(int n, int m);

FinPointSet set_union(const FinPointSet& a, const FinPointSet& b);

// True iff every point of `sub` lies in `sup`.
bool is_subset(const FinPointSet& sub, const FinPointSet& sup);

// Every subset of `s`, in bitmask order over the canonical point sequence.
// Rejects |s| > 20.
std::vector<FinPointSet> all_subsets(const FinPointSet& s);

}  // namespace cofiso

#endif  // COFISO_POINT_HPP
