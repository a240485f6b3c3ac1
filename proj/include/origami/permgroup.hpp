#ifndef ORIGAMI_PERMGROUP_HPP
#define ORIGAMI_PERMGROUP_HPP

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace origami {

/// Permutation of {0..7}; p[i] is the image of i.
using Perm = std::array<uint8_t, 8>;

Perm perm_identity();
Perm perm_mul(const Perm& p, const Perm& q);  // (p*q)(i) = p(q(i))
Perm perm_inverse(const Perm& p);
/// Builds a permutation from disjoint cycles in 1-indexed notation,
/// e.g. {{1,3,2,4},{5,7,6,8}}.
Perm perm_from_cycles(const std::vector<std::vector<int>>& cycles);
int perm_order(const Perm& p);
/// Sorted cycle lengths, e.g. (2,2,4).
std::vector<int> cycle_type(const Perm& p);

struct PermGroup {
  std::set<Perm> elements;
  std::vector<Perm> generators;

  size_t order() const { return elements.size(); }
  bool contains(const Perm& p) const { return elements.count(p) > 0; }
};

/// Closure of the generators under composition (breadth-first).
PermGroup perm_closure(const std::vector<Perm>& gens);

/// Normalizer of H in S8 by exhaustive scan over all 40320 elements.
PermGroup normalizer_in_s8(const PermGroup& h);

/// Set of cycle types over all elements of G.
std::set<std::vector<int>> cycle_type_set(const PermGroup& g);

}  // namespace origami

#endif
