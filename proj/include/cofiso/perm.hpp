#ifndef COFISO_PERM_HPP
#define COFISO_PERM_HPP

#include <iosfwd>
#include <vector>

#include "cofiso/errors.hpp"
#include "cofiso/point.hpp"

namespace cofiso {

// A permutation of {1..n}, acting on the right: i |-> (i)sigma.
// Composition is left-to-right, x(sigma*tau) = (x sigma) tau.
class Perm {
 public:
  // images[i-1] = (i)sigma, values a bijection of 1..n.
  explicit Perm(const std::vector<int>& images);
  Perm(std::initializer_list<int> images)
      : Perm(std::vector<int>(images)) {}

  static Perm identity(int n);

  int degree() const { return static_cast<int>(map_.size()); }
  bool is_identity() const;

  // 1-based application: (i)sigma.
  int apply(int i) const { return map_[static_cast<std::size_t>(i - 1)] + 1; }

  // The external 1-based image sequence (1)sigma,...,(n)sigma.
  std::vector<int> images() const;

  friend bool operator==(const Perm& a, const Perm& b) {
    return a.map_ == b.map_;
  }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.map_ < b.map_;
  }

  friend Perm compose(const Perm& sigma, const Perm& tau);
  friend Perm invert(const Perm& sigma);
  friend Point act(const Point& p, const Perm& sigma);

 private:
  Perm() = default;
  std::vector<int> map_;  // 0-based images
};

std::ostream& operator<<(std::ostream& os, const Perm& sigma);

// (i)(compose(sigma,tau)) = ((i)sigma)tau.
Perm compose(const Perm& sigma, const Perm& tau);

Perm invert(const Perm& sigma);

// Right action by coordinate permutation: coordinate j of the result is
// coordinate (j)sigma^-1 of p, so act(act(p,s),t) = act(p,compose(s,t)).
Point act(const Point& p, const Perm& sigma);

// Pointwise image {act(p,sigma) : p in s}; a bijection on sets.
FinPointSet set_image(const FinPointSet& s, const Perm& sigma);

// All n! permutations in lexicographic image order; 2 <= n <= 8.
std::vector<Perm> all_perms(int n);

}  // namespace cofiso

#endif  // COFISO_PERM_HPP
