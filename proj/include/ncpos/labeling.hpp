#pragma once

#include <vector>

#include "ncpos/caterpillar.hpp"
#include "ncpos/factorization.hpp"
#include "ncpos/index_set.hpp"

namespace ncpos {

/// Suffix products sigma_j = t_j t_{j+1} ... t_{n-1}, j = 1..n, with
/// sigma_n the identity and sigma_1 the n-cycle.
class PartialProducts {
 public:
  /// Throws InvalidArgument if w is not a factorization of the n-cycle.
  explicit PartialProducts(const FactorSequence& w);

  int n() const { return static_cast<int>(sigmas_.size()); }
  const Permutation& sigma(int j) const { return sigmas_[static_cast<std::size_t>(j - 1)]; }

 private:
  std::vector<Permutation> sigmas_;
};

inline PartialProducts partial_products(const FactorSequence& w) { return PartialProducts(w); }

/// A_j = { 1 <= i <= n-1 : sigma_j(i) > sigma_{j+1}(i) } for j = 1..n-1
/// (entry j-1 of the result). Throws InternalError if some A_j is not a
/// singleton.
std::vector<IndexSet> label_sets(const FactorSequence& w);

/// The labeling permutation on [n-1]: j maps to the element of A_j.
Permutation phi(const FactorSequence& w);

/// Des(phi(w)), a subset of [n-2].
IndexSet chain_descent(const FactorSequence& w);

/// phi(c) for a caterpillar, read off the interval structure of its prefix
/// products in O(n) instead of forming all suffix products. Always checked
/// against phi(c); throws InternalError on disagreement.
Permutation phi_caterpillar_fast(const ConvexCaterpillar& c);

/// The fast path alone, without the cross-check.
Permutation phi_caterpillar_unchecked(const ConvexCaterpillar& c);

}  // namespace ncpos
