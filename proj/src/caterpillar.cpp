#include "ncpos/caterpillar.hpp"

#include <set>

#include "ncpos/error.hpp"

namespace ncpos {

ConvexCaterpillar::ConvexCaterpillar(FactorSequence word)
    : word_(std::move(word)), tree_(build_geometric_graph(word_)) {
  if (!is_linearly_ordered(word_)) {
    throw InvalidArgument(word_.to_string() + " is not linearly ordered");
  }
  if (!is_convex_caterpillar(tree_)) {
    throw InternalError("tree of linearly ordered word " + word_.to_string() +
                        " is not a convex caterpillar");
  }
  const GYOrder order(tree_);
  if (!order.is_total()) {
    throw InternalError("GY order of caterpillar " + word_.to_string() + " is not total");
  }
  for (int i = 1; i < word_.size(); ++i) {
    if (!order.less(word_.at(i), word_.at(i + 1))) {
      throw InternalError("word " + word_.to_string() + " disagrees with its GY order");
    }
  }
  for (int i = 1; i <= word_.size(); ++i) {
    const auto kind = classify_edge(tree_, word_.at(i));
    branch_.push_back(kind == EdgeKind::kBranch || kind == EdgeKind::kBoth);
    link_.push_back(kind == EdgeKind::kLink || kind == EdgeKind::kBoth);
  }
}

DescentSet descent_set_direct(const FactorSequence& u) {
  if (!is_linearly_ordered(u)) {
    throw InvalidArgument(u.to_string() + " is not linearly ordered");
  }
  DescentSet des;
  for (int i = 1; i + 1 <= u.size(); ++i) {
    const int b = *u.at(i).common_letter(u.at(i + 1));
    if (u.at(i).other(b) > u.at(i + 1).other(b)) des.insert(i);
  }
  return des;
}

int main_index(const FactorSequence& word) {
  for (int i = 1; i <= word.size(); ++i) {
    if (word.at(i).contains(1)) return i;
  }
  throw InvalidArgument("no factor of " + word.to_string() + " contains the letter 1");
}

FactorSequence caterpillar_word(int n, int first, const std::vector<bool>& branch_at) {
  if (n < 2) throw InvalidArgument("caterpillars need n >= 2");
  if (first < 1 || first > n) throw InvalidArgument("first edge label outside [n]");
  if (n >= 3 && static_cast<int>(branch_at.size()) < n - 1) {
    throw InvalidArgument("branch flags must cover positions up to n-2");
  }
  int lo = first;
  int hi = wrap_label(first + 1, n);
  std::vector<Transposition> factors{Transposition(lo, hi)};
  for (int k = 2; k <= n - 1; ++k) {
    if (k == n - 1 || !branch_at[static_cast<std::size_t>(k)]) {
      factors.emplace_back(hi, wrap_label(hi + 1, n));
      hi = wrap_label(hi + 1, n);
    } else {
      factors.emplace_back(hi, wrap_label(lo - 1, n));
      lo = wrap_label(lo - 1, n);
    }
  }
  return FactorSequence(n, std::move(factors));
}

ConvexCaterpillar reconstruct(int n, int main, const DescentSet& descents) {
  if (n < 2) throw InvalidArgument("caterpillars need n >= 2");
  if (!descents.within(n - 2)) {
    throw InvalidArgument("descent set " + descents.to_string() + " is not inside [" + std::to_string(n - 2) + "]");
  }
  if (main < 1 || main > n - 1) {
    throw InvalidArgument("main index " + std::to_string(main) + " outside [1," + std::to_string(n - 1) + "]");
  }
  if (main != 1 && !descents.contains(main - 1)) {
    throw InvalidArgument("main index " + std::to_string(main) +
                          " must be 1 or directly follow a descent; " + std::to_string(main - 1) +
                          " is not in " + descents.to_string());
  }

  std::vector<bool> branch_at(static_cast<std::size_t>(std::max(n, 2)), false);
  // Before the main edge, a descent at i means t_{i+1} is a branch.
  for (int pos = 2; pos <= main - 1; ++pos) branch_at[static_cast<std::size_t>(pos)] = descents.contains(pos - 1);
  // After it, a descent at i means t_i is a branch.
  for (int pos = main + 1; pos <= n - 2; ++pos) branch_at[static_cast<std::size_t>(pos)] = descents.contains(pos);

  int first = 1;
  if (n == 2) {
    first = 1;
  } else if (main == 1) {
    // (n,1) leaves 1 interior, which makes 1 a descent; (1,2) makes 1 a leaf.
    first = descents.contains(1) ? n : 1;
  } else {
    int branches_before = 0;
    for (int pos = 2; pos <= main - 1; ++pos) branches_before += branch_at[static_cast<std::size_t>(pos)] ? 1 : 0;
    const int links_before = (main - 2) - branches_before;
    // 1 enters as a new leaf unless main is a descent (1 interior).
    const bool enters_as_leaf = main == n - 1 || !descents.contains(main);
    if (main <= n - 2) branch_at[static_cast<std::size_t>(main)] = enters_as_leaf;
    if (enters_as_leaf) {
      // lo after `main` steps is first - (branches_before + 1) == 1.
      first = wrap_label(2 + branches_before, n);
    } else {
      // hi after `main` steps is first + 1 + (links_before + 1) == 1.
      first = wrap_label(-1 - links_before, n);
    }
  }

  ConvexCaterpillar c(caterpillar_word(n, first, branch_at));
  if (main_index(c) != main || descent_set_direct(c.word()) != descents) {
    throw InternalError("reconstruction of (" + std::to_string(main) + ", " + descents.to_string() +
                        ") produced " + c.word().to_string());
  }
  return c;
}

std::vector<ConvexCaterpillar> enumerate_caterpillars(int n) {
  if (n < 2) throw InvalidArgument("caterpillars need n >= 2");
  std::set<FactorSequence> words;
  const int free_positions = std::max(0, n - 3);  // positions 2..n-2
  for (int first = 1; first <= n; ++first) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_positions); ++mask) {
      std::vector<bool> branch_at(static_cast<std::size_t>(std::max(n, 2)), false);
      for (int b = 0; b < free_positions; ++b) branch_at[static_cast<std::size_t>(b + 2)] = ((mask >> b) & 1U) != 0;
      auto w = caterpillar_word(n, first, branch_at);
      if (!is_cycle_factorization(w) || !is_linearly_ordered(w)) {
        throw InternalError("caterpillar word " + w.to_string() + " is not linearly ordered");
      }
      words.insert(std::move(w));
    }
  }
  std::vector<ConvexCaterpillar> out;
  out.reserve(words.size());
  for (const auto& w : words) out.emplace_back(w);
  return out;
}

std::map<DescentSet, long long> descent_distribution(int n) {
  std::map<DescentSet, long long> dist;
  for (const auto& j : all_subsets(n - 2)) dist[j] = 0;
  for (const auto& c : enumerate_caterpillars(n)) ++dist[descent_set_direct(c.word())];
  return dist;
}

std::vector<PrefixProfile> structural_profile(const ConvexCaterpillar& c) {
  const int n = c.n();
  const auto& w = c.word();
  const auto& tree = c.tree();
  std::vector<PrefixProfile> out;

  const Transposition& t1 = w.at(1);
  int lo = t1.a();
  int hi = t1.b();
  if (t1.a() == 1 && t1.b() == n && n > 2) std::swap(lo, hi);
  if (wrap_label(lo + 1, n) != hi) throw InternalError("first edge " + t1.to_string() + " is not a link");
  if (n >= 3 && !w.at(2).contains(hi)) {
    throw InternalError("second factor of " + w.to_string() + " does not continue at " + std::to_string(hi));
  }

  PrefixProfile prof;
  auto record = [&](int k, const Transposition& t, int added) {
    prof.k = k;
    prof.endpoints = CyclicInterval{n, lo, hi};
    if (k == n - 1) prof.endpoints = CyclicInterval{n, lo, wrap_label(lo - 1, n)};
    if (c.is_branch(k)) {
      int leaf = added;
      if (!tree.is_leaf(leaf)) leaf = t.other(added);
      prof.leaves.push_back(leaf);
    }
    if (c.is_link(k)) prof.links.push_back(t);
    prof.product_cycle = prof.endpoints.members();
    out.push_back(prof);
  };
  record(1, t1, lo);

  for (int k = 2; k <= n - 1; ++k) {
    const Transposition& t = w.at(k);
    if (!t.contains(hi)) {
      throw InternalError("factor " + std::to_string(k) + " of " + w.to_string() + " misses " + std::to_string(hi));
    }
    const int v = t.other(hi);
    int added = v;
    if (v == wrap_label(hi + 1, n)) {
      hi = v;
    } else if (v == wrap_label(lo - 1, n)) {
      lo = v;
    } else {
      throw InternalError("factor " + t.to_string() + " leaves the interval [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "]");
    }
    record(k, t, added);
  }
  return out;
}

}  // namespace ncpos
