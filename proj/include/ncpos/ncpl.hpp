#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ncpos/factorization.hpp"

namespace ncpos {

using Block = std::vector<int>;

/// No a < b < c < d with a, c in one block and b, d in another.
/// Blocks must be disjoint and cover [n]; they need not be sorted.
bool is_noncrossing(int n, const std::vector<Block>& blocks);

/// A noncrossing set partition of [n]. Blocks are sorted internally and
/// ordered by their minima.
class NoncrossingPartition {
 public:
  NoncrossingPartition() = default;
  /// Throws InvalidArgument unless the blocks partition [n] without crossing.
  NoncrossingPartition(int n, std::vector<Block> blocks);

  static NoncrossingPartition singletons(int n);
  static NoncrossingPartition one_block(int n);
  /// Orbits of p.
  static NoncrossingPartition orbits_of(const Permutation& p);

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  /// Index into blocks() of the block holding x.
  int block_of(int x) const;

  std::string to_string() const;  ///< "{1,2}{3}"

  bool operator==(const NoncrossingPartition&) const = default;
  auto operator<=>(const NoncrossingPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

/// Every block of p lies inside a block of q. Throws on mismatched n.
bool refines(const NoncrossingPartition& p, const NoncrossingPartition& q);
/// q is obtained from p by merging exactly two blocks.
bool covers(const NoncrossingPartition& p, const NoncrossingPartition& q);

/// NC_n in lexicographic block order. n >= 1.
std::vector<NoncrossingPartition> enumerate_noncrossing_partitions(int n);

/// pi_0 < pi_1 < ... < pi_{n-1}, from all singletons to one block.
class MaximalChain {
 public:
  /// Throws InvalidArgument unless consecutive entries are covers running
  /// from singletons(n) to one_block(n).
  explicit MaximalChain(std::vector<NoncrossingPartition> partitions);

  int n() const { return partitions_.front().n(); }
  int length() const { return static_cast<int>(partitions_.size()) - 1; }
  const std::vector<NoncrossingPartition>& partitions() const { return partitions_; }
  const NoncrossingPartition& operator[](int k) const { return partitions_[static_cast<std::size_t>(k)]; }

  bool operator==(const MaximalChain&) const = default;
  auto operator<=>(const MaximalChain&) const = default;

 private:
  std::vector<NoncrossingPartition> partitions_;
};

/// pi_k = orbits of t_1 ... t_k. Throws InvalidArgument if w is not in F_n;
/// InternalError if some pi_k crosses or a step is not a cover.
MaximalChain chain_of_factorization(const FactorSequence& w);

/// All maximal chains of NC_n, found by walking covers upward. n >= 2.
std::vector<MaximalChain> enumerate_maximal_chains(int n);

/// Inverse of chain_of_factorization on NC_n, backed by a table of F_n.
class ChainInverter {
 public:
  explicit ChainInverter(int n);
  int n() const { return n_; }
  /// Throws InvalidArgument if m is not the chain of any factorization.
  const FactorSequence& operator()(const MaximalChain& m) const;

 private:
  int n_;
  std::map<MaximalChain, FactorSequence> table_;
};

/// One-shot inverse. Builds a ChainInverter for m.n() on each call.
FactorSequence factorization_of_chain(const MaximalChain& m);

}  // namespace ncpos
