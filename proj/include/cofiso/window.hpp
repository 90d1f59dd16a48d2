#ifndef COFISO_WINDOW_HPP
#define COFISO_WINDOW_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "cofiso/element.hpp"

namespace cofiso {

// An explicit partial injection on the box {1..m}^n, stored as a table of
// (source, target) pairs sorted by source.  This is the concrete model
// against which the symbolic monoid is verified pointwise.
class WindowMap {
 public:
  WindowMap(int n, int m, std::vector<std::pair<Point, Point>> pairs);

  int dimension() const { return n_; }
  int box_side() const { return m_; }

  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<Point, Point>>& pairs() const { return pairs_; }

  std::optional<Point> apply(const Point& x) const;

  friend bool operator==(const WindowMap& a, const WindowMap& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.pairs_ == b.pairs_;
  }
  friend bool operator!=(const WindowMap& a, const WindowMap& b) {
    return !(a == b);
  }

 private:
  int n_;
  int m_;
  std::vector<std::pair<Point, Point>> pairs_;
};

std::ostream& operator<<(std::ostream& os, const WindowMap& w);

WindowMap identity_window(int n, int m);

// All-pairs check that squared distances are preserved.
bool is_partial_isometry(const WindowMap& w);

// Pointwise composition, x(w1 w2) = (x w1) w2 where defined.
WindowMap compose_windows(const WindowMap& w1, const WindowMap& w2);

// Restriction of a symbolic element to the box; requires the excluded set
// to lie inside the box.  The result is always a partial isometry.
WindowMap render(const Element& a, int m);

struct Recognition {
  Element element;
  // More than one permutation is consistent with the (finite) domain; the
  // lexicographically least one was chosen.  Cannot happen for maps on N^n
  // itself, only for small windows.
  bool ambiguous;
};

// Classify a window map back to normal form: succeeds iff some coordinate
// permutation matches every pair, returning (sigma, box minus domain).
// Distance-preserving maps that are not coordinate permutations (e.g. box
// reflections) are rejected: they do not extend to cofinite isometries.
Recognition recognize(const WindowMap& w);

// |{y in the box : squared_distance(x,y) = 1}|, by scanning the box.
// Requires x_i + 1 <= m for every coordinate so the unit sphere around x is
// not truncated.
int count_unit_neighbors(const Point& x, int m);

// Exact floor of the square root, integer arithmetic only.
std::int64_t isqrt(std::int64_t v);

// All i in [0, bound] for which (x+i)^2 + y is a perfect square.
std::vector<std::int64_t> integer_terms_scan(std::int64_t x, std::int64_t y,
                                             std::int64_t bound);

}  // namespace cofiso

#endif  // COFISO_WINDOW_HPP
