#include "ncpos/ncpl.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ncpos/error.hpp"

namespace ncpos {

bool is_noncrossing(int n, const std::vector<Block>& blocks) {
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> last(blocks.size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) {
      if (x < 1 || x > n || owner[static_cast<std::size_t>(x)] != -1) {
        throw InvalidArgument("blocks do not partition [" + std::to_string(n) + "]");
      }
      owner[static_cast<std::size_t>(x)] = static_cast<int>(b);
      last[b] = std::max(last[b], x);
    }
  }
  for (int x = 1; x <= n; ++x) {
    if (owner[static_cast<std::size_t>(x)] == -1) {
      throw InvalidArgument("blocks do not cover " + std::to_string(x));
    }
  }
  // Scan left to right: open blocks must nest like parentheses.
  std::vector<int> open;
  std::vector<bool> started(blocks.size(), false);
  for (int x = 1; x <= n; ++x) {
    const int b = owner[static_cast<std::size_t>(x)];
    if (!started[static_cast<std::size_t>(b)]) {
      started[static_cast<std::size_t>(b)] = true;
      if (last[static_cast<std::size_t>(b)] != x) open.push_back(b);
      continue;
    }
    if (open.empty() || open.back() != b) return false;
    if (last[static_cast<std::size_t>(b)] == x) open.pop_back();
  }
  return true;
}

NoncrossingPartition::NoncrossingPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw InvalidArgument("partition needs n >= 1");
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidArgument("empty block");
    std::sort(b.begin(), b.end());
  }
  if (!is_noncrossing(n, blocks_)) throw InvalidArgument("partition " + to_string() + " is crossing");
  std::sort(blocks_.begin(), blocks_.end());
}

NoncrossingPartition NoncrossingPartition::singletons(int n) {
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return NoncrossingPartition(n, std::move(blocks));
}

NoncrossingPartition NoncrossingPartition::one_block(int n) {
  Block all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return NoncrossingPartition(n, {all});
}

NoncrossingPartition NoncrossingPartition::orbits_of(const Permutation& p) {
  return NoncrossingPartition(p.n(), cycle_decomposition(p));
}

int NoncrossingPartition::block_of(int x) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), x)) return static_cast<int>(b);
  }
  throw InvalidArgument(std::to_string(x) + " is not in the ground set");
}

std::string NoncrossingPartition::to_string() const {
  std::string s;
  for (const auto& b : blocks_) {
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += '}';
  }
  return s;
}

bool refines(const NoncrossingPartition& p, const NoncrossingPartition& q) {
  if (p.n() != q.n()) throw InvalidArgument("refines: partitions of different ground sets");
  for (const auto& b : p.blocks()) {
    const int target = q.block_of(b.front());
    for (int x : b) {
      if (q.block_of(x) != target) return false;
    }
  }
  return true;
}

bool covers(const NoncrossingPartition& p, const NoncrossingPartition& q) {
  return refines(p, q) && q.block_count() + 1 == p.block_count();
}

std::vector<NoncrossingPartition> enumerate_noncrossing_partitions(int n) {
  if (n < 1) throw InvalidArgument("NC_n needs n >= 1");
  std::vector<NoncrossingPartition> out;
  // Restricted growth strings enumerate every set partition once.
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> walk = [&](int pos, int blocks) {
    if (pos == n) {
      std::vector<Block> bl(static_cast<std::size_t>(blocks));
      for (int i = 0; i < n; ++i) bl[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i + 1);
      if (is_noncrossing(n, bl)) out.emplace_back(n, std::move(bl));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      walk(pos + 1, std::max(blocks, b + 1));
    }
  };
  walk(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

MaximalChain::MaximalChain(std::vector<NoncrossingPartition> partitions) : partitions_(std::move(partitions)) {
  if (partitions_.empty()) throw InvalidArgument("empty chain");
  const int n = partitions_.front().n();
  if (partitions_.front() != NoncrossingPartition::singletons(n) ||
      partitions_.back() != NoncrossingPartition::one_block(n)) {
    throw InvalidArgument("chain must run from singletons to the one-block partition");
  }
  for (std::size_t k = 1; k < partitions_.size(); ++k) {
    if (!covers(partitions_[k - 1], partitions_[k])) {
      throw InvalidArgument("step " + std::to_string(k) + " of the chain is not a cover");
    }
  }
}

MaximalChain chain_of_factorization(const FactorSequence& w) {
  if (!is_cycle_factorization(w)) {
    throw InvalidArgument(w.to_string() + " is not a factorization of the " + std::to_string(w.n()) + "-cycle");
  }
  std::vector<NoncrossingPartition> parts;
  Permutation prefix(w.n());
  std::vector<Block> orbits = cycle_decomposition(prefix);
  parts.emplace_back(w.n(), orbits);
  for (const auto& t : w.factors()) {
    prefix.apply_right(t);
    orbits = cycle_decomposition(prefix);
    if (!is_noncrossing(w.n(), orbits)) {
      throw InternalError("prefix orbits of " + w.to_string() + " cross");
    }
    parts.emplace_back(w.n(), orbits);
    if (!covers(parts[parts.size() - 2], parts.back())) {
      throw InternalError("factor " + t.to_string() + " of " + w.to_string() + " is not a cover step");
    }
  }
  return MaximalChain(std::move(parts));
}

std::vector<MaximalChain> enumerate_maximal_chains(int n) {
  if (n < 2) throw InvalidArgument("maximal chains need n >= 2");
  std::vector<MaximalChain> out;
  std::vector<NoncrossingPartition> path{NoncrossingPartition::singletons(n)};
  std::function<void()> walk = [&]() {
    const NoncrossingPartition top = path.back();
    if (top.block_count() == 1) {
      out.emplace_back(path);
      return;
    }
    const auto& blocks = top.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        std::vector<Block> merged;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
          if (k != i && k != j) merged.push_back(blocks[k]);
        }
        Block u = blocks[i];
        u.insert(u.end(), blocks[j].begin(), blocks[j].end());
        merged.push_back(std::move(u));
        if (!is_noncrossing(n, merged)) continue;
        path.emplace_back(n, std::move(merged));
        walk();
        path.pop_back();
      }
    }
  };
  walk();
  std::sort(out.begin(), out.end());
  return out;
}

ChainInverter::ChainInverter(int n) : n_(n) {
  for (auto& w : enumerate_factorizations(n)) {
    auto [it, inserted] = table_.emplace(chain_of_factorization(w), w);
    if (!inserted) {
      throw InternalError("factorizations " + it->second.to_string() + " and " + w.to_string() +
                          " share a chain");
    }
  }
}

const FactorSequence& ChainInverter::operator()(const MaximalChain& m) const {
  if (m.n() != n_) throw InvalidArgument("chain has the wrong ground set size");
  auto it = table_.find(m);
  if (it == table_.end()) throw InvalidArgument("chain is not the image of any factorization");
  return it->second;
}

FactorSequence factorization_of_chain(const MaximalChain& m) { return ChainInverter(m.n())(m); }

}  // namespace ncpos
