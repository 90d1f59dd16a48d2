#ifndef COFISO_SAMPLING_HPP
#define COFISO_SAMPLING_HPP

#include <random>

#include "cofiso/element.hpp"

namespace cofiso {

// Seeded sampling for verification sweeps.  Draws use the raw engine output
// (no distribution objects), so a given seed produces the same values on
// every platform.

Perm random_perm(std::mt19937_64& rng, int n);

// A subset of box_points(n, m) with uniformly chosen size in [0, max_size].
FinPointSet random_point_subset(std::mt19937_64& rng, int n, int m,
                                int max_size);

Element random_element(std::mt19937_64& rng, int n, int m, int max_excluded);

Element random_idempotent(std::mt19937_64& rng, int n, int m,
                          int max_excluded);

}  // namespace cofiso

#endif  // COFISO_SAMPLING_HPP
