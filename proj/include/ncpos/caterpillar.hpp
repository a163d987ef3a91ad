#pragma once

#include <map>
#include <vector>

#include "ncpos/factorization.hpp"
#include "ncpos/geom_tree.hpp"
#include "ncpos/index_set.hpp"

namespace ncpos {

/// Descent sets of words live in [n-2]; of permutations on [m], in [m-1].
using DescentSet = IndexSet;

/// A convex caterpillar identified with its unique linearly ordered word.
class ConvexCaterpillar {
 public:
  /// Validates that `word` is linearly ordered and that its tree is a convex
  /// caterpillar whose GY order is total with `word` as the only extension.
  explicit ConvexCaterpillar(FactorSequence word);

  int n() const { return word_.n(); }
  const FactorSequence& word() const { return word_; }
  const GeometricTree& tree() const { return tree_; }

  /// Position i in 1..n-1.
  bool is_branch(int i) const { return branch_[static_cast<std::size_t>(i - 1)]; }
  bool is_link(int i) const { return link_[static_cast<std::size_t>(i - 1)]; }

  bool operator==(const ConvexCaterpillar& o) const { return word_ == o.word_; }
  auto operator<=>(const ConvexCaterpillar& o) const { return word_ <=> o.word_; }

 private:
  FactorSequence word_;
  GeometricTree tree_;
  std::vector<bool> branch_;
  std::vector<bool> link_;
};

/// Positions i in [n-2] where t_i = (b,c), t_{i+1} = (b,a) with c > a, b the
/// common letter. Throws InvalidArgument when u is not linearly ordered.
DescentSet descent_set_direct(const FactorSequence& u);

/// Position of the first factor containing the letter 1.
int main_index(const FactorSequence& word);
inline int main_index(const ConvexCaterpillar& c) { return main_index(c.word()); }

/// The word with first edge (first, first+1) whose later factors are
/// branches exactly at the flagged positions. `branch_at[k]` refers to
/// position k, is only read for 2 <= k <= n-2, and must have size >= n-1
/// when n >= 3.
///
/// Each step extends the interval [lo, hi] covered so far: a link adds
/// (hi, hi+1), a branch adds (hi, lo-1).
FactorSequence caterpillar_word(int n, int first, const std::vector<bool>& branch_at);

/// The unique caterpillar with main index `main` and descent set `descents`.
/// Requires descents within [n-2], 1 <= main <= n-1, and main == 1 or
/// main-1 in descents; throws InvalidArgument otherwise.
ConvexCaterpillar reconstruct(int n, int main, const DescentSet& descents);

/// Ct_n, built from (first edge, branch positions) and checked against the
/// linear-order validator. Sorted by word. n >= 2.
std::vector<ConvexCaterpillar> enumerate_caterpillars(int n);

/// Number of caterpillars with each descent set; every subset of [n-2]
/// appears as a key, including those with count zero.
std::map<DescentSet, long long> descent_distribution(int n);

/// State after the first k factors of a caterpillar word.
struct PrefixProfile {
  int k = 0;
  CyclicInterval endpoints;          ///< labels touched by t_1..t_k
  std::vector<int> leaves;           ///< leaf endpoints of branches among t_1..t_k, in order
  std::vector<Chord> links;          ///< links among t_1..t_k, in order
  std::vector<int> product_cycle;    ///< t_1...t_k as the cycle (l, l+1, ..., m)
};

/// One profile per k = 1..n-1, derived from the interval growth of the word
/// (no permutation products are formed).
std::vector<PrefixProfile> structural_profile(const ConvexCaterpillar& c);

}  // namespace ncpos
