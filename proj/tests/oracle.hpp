#pragma once

// Brute-force references, independent of the incremental engine.  Everything
// here is exponential/factorial on purpose: the point is that it obviously
// matches the definitions.

#include <algorithm>
#include <climits>
#include <set>
#include <vector>

#include "davlab/group.hpp"
#include "davlab/sequence.hpp"

namespace davlab::oracle {

/// All products over every ordering of `elems` (the whole list).
inline std::set<int> permutation_products(const Group& g,
                                          std::vector<int> elems) {
  std::set<int> out;
  std::sort(elems.begin(), elems.end());
  do {
    int p = g.identity();
    for (int e : elems) p = g.mul(p, e);
    out.insert(p);
  } while (std::next_permutation(elems.begin(), elems.end()));
  return out;
}

/// Min length of a product-one sub-multiset; INT_MAX when free.
inline int min_po_length(const Group& g, const SeqMultiset& s) {
  std::vector<int> elems = s.expand();
  int n = static_cast<int>(elems.size());
  int best = INT_MAX;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int len = __builtin_popcount(mask);
    if (len >= best) continue;
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(elems[i]);
    if (permutation_products(g, sub).count(g.identity())) best = len;
  }
  return best;
}

inline bool product_one_free(const Group& g, const SeqMultiset& s) {
  return min_po_length(g, s) == INT_MAX;
}

inline bool minimal_product_one(const Group& g, const SeqMultiset& s) {
  if (s.empty()) return false;
  if (!permutation_products(g, s.expand()).count(g.identity())) return false;
  return min_po_length(g, s) == s.length();
}

/// Metacyclic product via affine maps on Z_b: x^i y^j acts as t -> g^j t + i,
/// and the group product is map composition.
struct AffineMap {
  long long scale, shift, b;
  AffineMap compose(const AffineMap& o) const {
    return {scale * o.scale % b, (scale * o.shift + shift) % b, b};
  }
};

inline AffineMap affine_of(long long i, long long j, long long a, long long b,
                           long long g) {
  long long s = 1;
  for (long long t = 0; t < j % a; ++t) s = s * g % b;
  return {s, i % b, b};
}

}  // namespace davlab::oracle
