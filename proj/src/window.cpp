#include "cofiso/window.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

namespace cofiso {

namespace {

bool in_box(const Point& p, int m) {
  for (int i = 0; i < p.dimension(); ++i)
    if (p[i] > m) return false;
  return true;
}

}  // namespace

WindowMap::WindowMap(int n, int m, std::vector<std::pair<Point, Point>> pairs)
    : n_(n), m_(m), pairs_(std::move(pairs)) {
  if (n_ < 2) throw DimensionError("window map: n >= 2 required");
  if (m_ < 1) throw RangeError("window map: m >= 1 required");
  for (const auto& [x, y] : pairs_) {
    if (x.dimension() != n_ || y.dimension() != n_)
      throw DimensionError("window map: point dimension differs from n");
    if (!in_box(x, m_) || !in_box(y, m_))
      throw RangeError("window map: point outside the box");
  }
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 1; i < pairs_.size(); ++i)
    if (pairs_[i].first == pairs_[i - 1].first)
      throw Error("window map: repeated source");
  std::vector<Point> targets;
  targets.reserve(pairs_.size());
  for (const auto& pr : pairs_) targets.push_back(pr.second);
  std::sort(targets.begin(), targets.end());
  for (std::size_t i = 1; i < targets.size(); ++i)
    if (targets[i] == targets[i - 1])
      throw Error("window map: repeated target");
}

std::optional<Point> WindowMap::apply(const Point& x) const {
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), x,
      [](const std::pair<Point, Point>& pr, const Point& p) {
        return pr.first < p;
      });
  if (it == pairs_.end() || it->first != x) return std::nullopt;
  return it->second;
}

std::ostream& operator<<(std::ostream& os, const WindowMap& w) {
  os << "window n=" << w.dimension() << " m=" << w.box_side() << " {";
  bool first = true;
  for (const auto& [x, y] : w.pairs()) {
    if (!first) os << ';';
    first = false;
    os << x << "->" << y;
  }
  return os << '}';
}

WindowMap identity_window(int n, int m) {
  std::vector<std::pair<Point, Point>> pairs;
  for (const Point& p : box_points(n, m)) pairs.emplace_back(p, p);
  return WindowMap(n, m, std::move(pairs));
}

bool is_partial_isometry(const WindowMap& w) {
  const auto& pairs = w.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (squared_distance(pairs[i].first, pairs[j].first) !=
          squared_distance(pairs[i].second, pairs[j].second))
        return false;
  return true;
}

WindowMap compose_windows(const WindowMap& w1, const WindowMap& w2) {
  if (w1.dimension() != w2.dimension() || w1.box_side() != w2.box_side())
    throw RangeError("compose_windows: box mismatch");
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& [x, y] : w1.pairs())
    if (auto z = w2.apply(y)) pairs.emplace_back(x, *z);
  return WindowMap(w1.dimension(), w1.box_side(), std::move(pairs));
}

WindowMap render(const Element& a, int m) {
  for (const Point& p : a.excluded())
    if (!in_box(p, m))
      throw ExcludedSetOutsideBox("render: excluded set outside the box");
  std::vector<std::pair<Point, Point>> pairs;
  for (const Point& x : box_points(a.dimension(), m))
    if (!a.excluded().contains(x)) pairs.emplace_back(x, act(x, a.sigma()));
  return WindowMap(a.dimension(), m, std::move(pairs));
}

Recognition recognize(const WindowMap& w) {
  if (w.empty()) throw EmptyDomain("recognize: window map has empty domain");

  std::vector<Perm> fits;
  for (const Perm& sigma : all_perms(w.dimension())) {
    bool ok = true;
    for (const auto& [x, y] : w.pairs())
      if (act(x, sigma) != y) {
        ok = false;
        break;
      }
    if (ok) fits.push_back(sigma);
  }
  if (fits.empty())
    throw NotCoordinatePermutation(
        "recognize: no coordinate permutation matches");

  std::vector<Point> excluded;
  for (const Point& p : box_points(w.dimension(), w.box_side()))
    if (!w.apply(p)) excluded.push_back(p);
  // all_perms is in lexicographic order, so fits.front() is the least fit
  return Recognition{Element(fits.front(), FinPointSet(std::move(excluded))),
                     fits.size() > 1};
}

int count_unit_neighbors(const Point& x, int m) {
  for (int i = 0; i < x.dimension(); ++i)
    if (x[i] + 1 > m)
      throw TooCloseToUpperBoundary(
          "count_unit_neighbors: unit sphere truncated by the box");
  int count = 0;
  for (const Point& y : box_points(x.dimension(), m))
    if (squared_distance(x, y) == 1) ++count;
  return count;
}

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw RangeError("isqrt: negative argument");
  if (v < 2) return v;
  const auto u = static_cast<std::uint64_t>(v);
  // start above the root, Newton steps descend to the floor
  std::uint64_t x = std::uint64_t{1}
                    << ((std::bit_width(u) + 1) / 2);
  for (;;) {
    const std::uint64_t y = (x + u / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return static_cast<std::int64_t>(x);
}

std::vector<std::int64_t> integer_terms_scan(std::int64_t x, std::int64_t y,
                                             std::int64_t bound) {
  if (x < 1 || y < 1 || bound < 1)
    throw RangeError("integer_terms_scan: arguments must be >= 1");
  if (x + bound > 2000000000 || y > 4000000000000000000)
    throw RangeError("integer_terms_scan: arguments too large");
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i <= bound; ++i) {
    const std::int64_t base = x + i;
    const std::int64_t v = base * base + y;
    const std::int64_t r = isqrt(v);
    if (r * r == v) out.push_back(i);
  }
  return out;
}

}  // namespace cofiso
