#include "cofiso/sampling.hpp"

#include <algorithm>

namespace cofiso {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;  // bound >= 1; bias is irrelevant for test sweeps
}

}  // namespace

Perm random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(images[static_cast<std::size_t>(i)],
              images[below(rng, static_cast<std::uint64_t>(i) + 1)]);
  return Perm(images);
}

FinPointSet random_point_subset(std::mt19937_64& rng, int n, int m,
                                int max_size) {
  const FinPointSet box = box_points(n, m);
  const std::size_t cap =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(max_size, 0)),
                            box.size());
  const std::size_t size = below(rng, cap + 1);
  std::vector<bool> taken(box.size(), false);
  std::vector<Point> pts;
  while (pts.size() < size) {
    const std::size_t i = below(rng, box.size());
    if (taken[i]) continue;
    taken[i] = true;
    pts.push_back(box.points()[i]);
  }
  return FinPointSet(std::move(pts));
}

Element random_element(std::mt19937_64& rng, int n, int m, int max_excluded) {
  Perm sigma = random_perm(rng, n);
  return Element(std::move(sigma),
                 random_point_subset(rng, n, m, max_excluded));
}

Element random_idempotent(std::mt19937_64& rng, int n, int m,
                          int max_excluded) {
  return Element(Perm::identity(n),
                 random_point_subset(rng, n, m, max_excluded));
}

}  // namespace cofiso
