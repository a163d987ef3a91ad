#include "ncpos/labeling.hpp"

#include "ncpos/error.hpp"

namespace ncpos {

PartialProducts::PartialProducts(const FactorSequence& w) {
  if (!is_cycle_factorization(w)) {
    throw InvalidArgument(w.to_string() + " is not a factorization of the " + std::to_string(w.n()) + "-cycle");
  }
  const int n = w.n();
  sigmas_.assign(static_cast<std::size_t>(n), Permutation(n));
  for (int j = n - 1; j >= 1; --j) {
    Permutation s = sigmas_[static_cast<std::size_t>(j)];
    s.apply_left(w.at(j));  // sigma_j = t_j sigma_{j+1}
    sigmas_[static_cast<std::size_t>(j - 1)] = std::move(s);
  }
  if (sigma(1) != standard_cycle(n)) throw InternalError("sigma_1 is not the n-cycle");
}

std::vector<IndexSet> label_sets(const FactorSequence& w) {
  const PartialProducts pp(w);
  const int n = w.n();
  std::vector<IndexSet> out;
  for (int j = 1; j <= n - 1; ++j) {
    IndexSet a;
    for (int i = 1; i <= n - 1; ++i) {
      if (pp.sigma(j)(i) > pp.sigma(j + 1)(i)) a.insert(i);
    }
    if (a.size() != 1) {
      throw InternalError("label set A_" + std::to_string(j) + " of " + w.to_string() + " is " + a.to_string());
    }
    out.push_back(a);
  }
  return out;
}

Permutation phi(const FactorSequence& w) {
  std::vector<int> images;
  for (const auto& a : label_sets(w)) images.push_back(a.members().front());
  try {
    return Permutation::from_images(std::move(images));
  } catch (const InvalidArgument&) {
    throw InternalError("labels of " + w.to_string() + " do not form a permutation");
  }
}

IndexSet chain_descent(const FactorSequence& w) { return descent_set_of_permutation(phi(w)); }

namespace {

// The prefix product t_1...t_k of a caterpillar is the cycle on [lo, hi]
// sending each label to its successor and hi back to lo. Then
// sigma_{k+1} = (t_1...t_k)^{-1} gamma fixes [lo, hi-1], sends lo-1 to hi and
// every other x to x+1. This returns its inverse at y.
int suffix_inverse(int k, int lo, int hi, int n, int y) {
  if (k == 0) return wrap_label(y - 1, n);  // sigma_1 = gamma
  if (k == n - 1) return y;                // sigma_n = id
  if (cyclic_rank(lo, y, n) < cyclic_rank(lo, hi, n)) return y;
  if (y == hi) return wrap_label(lo - 1, n);
  return wrap_label(y - 1, n);
}

}  // namespace

Permutation phi_caterpillar_unchecked(const ConvexCaterpillar& c) {
  const int n = c.n();
  const auto profile = structural_profile(c);
  std::vector<int> images;
  for (int j = 1; j <= n - 1; ++j) {
    // sigma_j and sigma_{j+1} differ only at the preimages of t_j's letters;
    // the label is the one carried upward, i.e. the preimage of the smaller.
    const auto& span = profile[static_cast<std::size_t>(j - 1)].endpoints;
    images.push_back(suffix_inverse(j, span.start, span.end, n, c.word().at(j).a()));
  }
  return Permutation::from_images(std::move(images));
}

Permutation phi_caterpillar_fast(const ConvexCaterpillar& c) {
  Permutation fast = phi_caterpillar_unchecked(c);
  const Permutation slow = phi(c.word());
  if (fast != slow) {
    throw InternalError("fast labeling of " + c.word().to_string() + " gave " + fast.to_string() +
                        ", definition gives " + slow.to_string());
  }
  return fast;
}

}  // namespace ncpos
