#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ncpos/perm.hpp"

namespace ncpos {

/// An ordered sequence of transpositions on [n], read as the product
/// t_1 t_2 ... t_k with t_k acting first.
///
/// Nothing beyond "labels lie in [n]" is enforced here; membership in the
/// factorization sets is decided by the predicates below.
class FactorSequence {
 public:
  FactorSequence() = default;
  FactorSequence(int n, std::vector<Transposition> factors);

  /// Parses "(a,b)(c,d)..." (whitespace-insensitive). When n is 0 it is
  /// taken to be (number of factors + 1).
  static FactorSequence parse(std::string_view text, int n = 0);

  int n() const { return n_; }
  int size() const { return static_cast<int>(factors_.size()); }
  /// 1-based access, matching t_1 ... t_{n-1}.
  const Transposition& at(int i) const { return factors_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Transposition>& factors() const { return factors_; }

  Permutation product() const { return product_of(factors_, n_); }

  std::string to_string() const;  ///< "(1,2)(2,3)"

  bool operator==(const FactorSequence&) const = default;
  auto operator<=>(const FactorSequence&) const = default;

 private:
  int n_ = 0;
  std::vector<Transposition> factors_;
};

/// True iff the product equals the n-cycle. Length must be n-1.
bool is_cycle_factorization(const FactorSequence& w);

/// The set F_n of factorizations of (1,2,...,n) into n-1 transpositions,
/// sorted lexicographically. n >= 2.
std::vector<FactorSequence> enumerate_factorizations(int n);

/// Whether every pair of adjacent factors shares exactly one letter.
/// Throws InvalidArgument when w is not a factorization of the n-cycle.
bool is_linearly_ordered(const FactorSequence& w);

/// The set U_n of linearly ordered factorizations, sorted lexicographically.
/// Searched directly rather than by filtering F_n, so it stays fast past n = 10.
std::vector<FactorSequence> enumerate_linearly_ordered(int n);

/// Tree, non-crossing and cyclically-decreasing-neighbor conditions on G(w).
/// Returns false (never throws) on sequences of the right length.
bool gy_conditions(const FactorSequence& w);

/// True iff p is the canonical permutation of a noncrossing partition, i.e.
/// every block {b_1 < ... < b_k} is the cycle b_1 -> b_2 -> ... -> b_k -> b_1.
/// These are exactly the prefix products of factorizations of the n-cycle.
bool is_noncrossing_cycle_permutation(const Permutation& p);

}  // namespace ncpos
