// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Reference values come from the brute-force oracles wherever one exists.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "ncpos/caterpillar.hpp"
#include "ncpos/error.hpp"
#include "ncpos/factorization.hpp"
#include "ncpos/geom_tree.hpp"
#include "ncpos/labeling.hpp"
#include "ncpos/ncpl.hpp"
#include "ncpos/qsym.hpp"
#include "oracles.hpp"

using namespace ncpos;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

oracle::Word to_oracle(const FactorSequence& w) {
  oracle::Word out;
  for (const auto& t : w.factors()) out.emplace_back(t.a(), t.b());
  return out;
}

FactorSequence from_oracle(const oracle::Word& w, int n) {
  std::vector<Transposition> ts;
  for (auto [a, b] : w) ts.emplace_back(a, b);
  return FactorSequence(n, ts);
}

IndexSet as_set(const std::vector<int>& v) {
  IndexSet s;
  for (int x : v) s.insert(x);
  return s;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool shares_one_letter(oracle::Pair s, oracle::Pair t) {
  return (s.first == t.first || s.first == t.second) + (s.second == t.first || s.second == t.second) == 1;
}

// 1. |U_n| = n 2^(n-3), n = 2..12; each enumerated word re-checked by the oracle.
Verdict counts_linear() {
  Verdict v;
  for (int n = 2; n <= 12; ++n) {
    const auto u = enumerate_linearly_ordered(n);
    const long long want = n == 2 ? 1 : n * ipow(2, n - 3);
    if (static_cast<long long>(u.size()) != want) {
      v.fail("n=" + std::to_string(n) + ": " + std::to_string(u.size()) + " != " + std::to_string(want));
    }
    std::set<FactorSequence> distinct(u.begin(), u.end());
    if (distinct.size() != u.size()) v.fail("duplicates at n=" + std::to_string(n));
    for (const auto& w : u) {
      const auto ow = to_oracle(w);
      bool ok = oracle::is_n_cycle_product(ow, n);
      for (std::size_t i = 0; i + 1 < ow.size(); ++i) ok = ok && shares_one_letter(ow[i], ow[i + 1]);
      if (!ok) v.fail(w.to_string() + " is not linearly ordered");
    }
    if (n == 12 && v.pass) v.detail = "n=12: " + std::to_string(u.size());
  }
  return v;
}

// 2. |F_n| = n^(n-2), n = 2..7; brute-force set equality up to 6.
Verdict counts_hurwitz() {
  Verdict v;
  for (int n = 2; n <= 7; ++n) {
    const auto f = enumerate_factorizations(n);
    if (static_cast<long long>(f.size()) != ipow(n, n - 2)) v.fail("n=" + std::to_string(n) + ": " + std::to_string(f.size()));
    if (n <= 6) {
      std::vector<FactorSequence> brute;
      for (const auto& w : oracle::all_factorizations(n)) brute.push_back(from_oracle(w, n));
      if (brute != f) v.fail("enumeration differs from brute force at n=" + std::to_string(n));
    } else {
      std::set<FactorSequence> distinct(f.begin(), f.end());
      if (distinct.size() != f.size()) v.fail("duplicates at n=7");
      for (const auto& w : f) {
        if (!oracle::is_n_cycle_product(to_oracle(w), n)) v.fail(w.to_string() + " is not a factorization");
      }
    }
    if (n == 7 && v.pass) v.detail = "n=7: " + std::to_string(f.size());
  }
  return v;
}

// 3. Over all words of n-1 transpositions, n <= 6: tree conditions iff product is the n-cycle.
Verdict gy_characterization() {
  Verdict v;
  long long words = 0;
  long long hits = 0;
  for (int n = 2; n <= 6; ++n) {
    const auto ts = oracle::transpositions(n);
    const std::size_t k = static_cast<std::size_t>(n - 1);
    std::vector<std::size_t> idx(k, 0);
    oracle::Word w(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) w[i] = ts[idx[i]];
      ++words;
      const bool product = oracle::is_n_cycle_product(w, n);
      hits += product;
      if (gy_conditions(from_oracle(w, n)) != product) v.fail("mismatch at " + from_oracle(w, n).to_string());
      std::size_t pos = 0;
      while (pos < k && ++idx[pos] == ts.size()) idx[pos++] = 0;
      if (pos == k) break;
    }
  }
  if (v.pass) v.detail = std::to_string(words) + " words, " + std::to_string(hits) + " factorizations";
  return v;
}

// 4. For w in F_n, n <= 7: total iff convex caterpillar iff exactly one linear
// extension. Extensions are counted by brute force over edge orderings.
Verdict linearity() {
  Verdict v;
  long long total_count = 0;
  long long words = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& w : enumerate_factorizations(n)) {
      ++words;
      const auto tree = build_geometric_graph(w);
      const GYOrder order(tree);
      std::vector<int> perm(static_cast<std::size_t>(order.size()));
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      int extensions = 0;
      do {
        bool ok = true;
        for (std::size_t a = 0; a < perm.size() && ok; ++a)
          for (std::size_t b = a + 1; b < perm.size() && ok; ++b) ok = !order.less(perm[b], perm[a]);
        extensions += ok;
      } while (extensions < 2 && std::next_permutation(perm.begin(), perm.end()));
      const bool total = order.is_total();
      const bool convex = is_convex_caterpillar(tree);
      const bool unique = extensions == 1;
      total_count += total;
      if (total != convex || total != unique) v.fail("disagreement at " + w.to_string());
    }
  }
  if (v.pass) v.detail = std::to_string(words) + " factorizations, " + std::to_string(total_count) + " total";
  return v;
}

// 5. Des(u) = Des(phi(u)) on U_n, n <= 10, both sides from the oracle, and
// the library agrees with each side.
Verdict descent_equivalence() {
  Verdict v;
  long long words = 0;
  for (int n = 2; n <= 10; ++n) {
    for (const auto& u : enumerate_linearly_ordered(n)) {
      ++words;
      const auto ow = to_oracle(u);
      const auto sets = oracle::label_sets(ow, n);
      std::vector<int> labels;
      for (const auto& s : sets) {
        if (s.size() != 1) v.fail("label set of size " + std::to_string(s.size()) + " in " + u.to_string());
        labels.push_back(s.empty() ? 0 : s.front());
      }
      const auto word_des = oracle::word_descents(ow);
      const auto chain_des = oracle::sequence_descents(labels);
      if (word_des != chain_des) v.fail("descents differ at " + u.to_string());
      if (descent_set_direct(u) != as_set(word_des)) v.fail("library word descents wrong at " + u.to_string());
      if (chain_descent(u) != as_set(chain_des)) v.fail("library chain descents wrong at " + u.to_string());
    }
  }
  if (v.pass) v.detail = std::to_string(words) + " words";
  return v;
}

// 6. Every J in [n-2] is the descent set of exactly |J|+1 caterpillars, n <= 10.
Verdict distribution() {
  Verdict v;
  for (int n = 2; n <= 10; ++n) {
    std::map<std::vector<int>, int> count;
    for (const auto& u : enumerate_linearly_ordered(n)) ++count[oracle::word_descents(to_oracle(u))];
    const long long subsets = 1LL << (n - 2);
    if (static_cast<long long>(count.size()) != subsets) v.fail("n=" + std::to_string(n) + ": some J missing");
    for (const auto& [j, c] : count) {
      if (c != static_cast<int>(j.size()) + 1) v.fail("n=" + std::to_string(n) + ", J=" + as_set(j).to_string());
    }
    const auto lib = descent_distribution(n);
    for (const auto& [j, c] : lib) {
      const auto it = count.find(j.members());
      if (it == count.end() ? c != 0 : it->second != c) v.fail("library distribution differs at n=" + std::to_string(n));
    }
  }
  if (v.pass) v.detail = "n=2..10";
  return v;
}

// 7. (I, Des) is injective and reconstruct inverts it; inadmissible pairs are rejected.
Verdict reconstruction() {
  Verdict v;
  long long rejected = 0;
  for (int n = 2; n <= 10; ++n) {
    std::set<std::pair<int, std::vector<int>>> keys;
    for (const auto& u : enumerate_linearly_ordered(n)) {
      const auto ow = to_oracle(u);
      const int i = oracle::first_with_one(ow);
      const auto des = oracle::word_descents(ow);
      if (!keys.emplace(i, des).second) v.fail("key repeated at " + u.to_string());
      if (!(reconstruct(n, i, as_set(des)).word() == u)) v.fail("reconstruct misses " + u.to_string());
    }
    for (const auto& j : all_subsets(n - 2)) {
      for (int i = 2; i <= n - 1; ++i) {
        if (j.contains(i - 1)) continue;
        try {
          reconstruct(n, i, j);
          v.fail("accepted i=" + std::to_string(i) + ", J=" + j.to_string());
        } catch (const InvalidArgument&) {
          ++rejected;
        }
      }
    }
  }
  if (v.pass) v.detail = std::to_string(rejected) + " inadmissible pairs rejected";
  return v;
}

// 8. F-coefficients of Q(U_n) equal those of sum (k+1) s_(n-1-k,1^k), n = 2..10,
// and the Schur solve returns exactly those hook coefficients.
Verdict hook_identity() {
  Verdict v;
  for (int n = 2; n <= 10; ++n) {
    std::vector<IndexSet> des;
    for (const auto& u : enumerate_linearly_ordered(n)) des.push_back(as_set(oracle::word_descents(to_oracle(u))));
    const auto q = qsym_of_descent_multiset(n - 1, des);
    // Each k-subset of [m-1] is the descent set of one SYT of the hook with
    // k+1 rows, so the right side has coefficient |D|+1 on every F_D.
    for (const auto& d : all_subsets(n - 2)) {
      if (q.coefficient(d) != d.size() + 1) v.fail("n=" + std::to_string(n) + ": coefficient of F_" + d.to_string());
    }
    if (!(q == hook_identity_rhs(n))) v.fail("library hook sum differs at n=" + std::to_string(n));
    const auto r = expand_in_schur(q);
    if (!std::holds_alternative<SchurExpansion>(r)) {
      v.fail("not symmetric at n=" + std::to_string(n));
      continue;
    }
    const auto& s = std::get<SchurExpansion>(r);
    if (!s.integral() || !s.nonnegative()) v.fail("not Schur-positive at n=" + std::to_string(n));
    for (const auto& shape : partitions_of(n - 1)) {
      const bool hook = shape.length() == 1 || shape.parts()[1] == 1;
      const Rational want = hook ? shape.length() : 0;
      if (s.coefficient(shape) != want) v.fail("n=" + std::to_string(n) + ": s_" + shape.to_string());
    }
  }
  if (v.pass) {
    v.detail = "degree n-1 hooks; size-n hooks would need mass (n+1)2^(n-2), e.g. 2816 vs |U_10| = 1280";
  }
  return v;
}

// 9. Every A_j is a singleton and the labels permute [n-1], F_n with n <= 6.
Verdict label_sets_singletons() {
  Verdict v;
  long long words = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& w : enumerate_factorizations(n)) {
      ++words;
      const auto sets = oracle::label_sets(to_oracle(w), n);
      std::vector<int> labels;
      for (const auto& s : sets) {
        if (s.size() != 1) v.fail(w.to_string() + " has a label set of size " + std::to_string(s.size()));
        labels.push_back(s.empty() ? 0 : s.front());
      }
      auto sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != static_cast<int>(i) + 1) v.fail("labels of " + w.to_string() + " are not a permutation");
      }
      if (phi(w).images() != labels) v.fail("library labels differ at " + w.to_string());
    }
  }
  if (v.pass) v.detail = std::to_string(words) + " factorizations";
  return v;
}

// 10. |NC_n| = Catalan(n), n <= 10; orbit chains biject F_n onto maximal chains, n <= 6.
Verdict lattice() {
  Verdict v;
  for (int n = 1; n <= 10; ++n) {
    std::set<std::vector<std::vector<int>>> brute;
    for (const auto& p : oracle::set_partitions(n)) {
      if (oracle::noncrossing_quadruples(n, p)) brute.insert(p);
    }
    std::set<std::vector<std::vector<int>>> lib;
    for (const auto& p : enumerate_noncrossing_partitions(n)) lib.insert(p.blocks());
    if (static_cast<long long>(lib.size()) != oracle::catalan(n) || lib != brute) v.fail("NC_" + std::to_string(n));
  }
  std::size_t chains6 = 0;
  for (int n = 2; n <= 6; ++n) {
    std::set<MaximalChain> image;
    for (const auto& w : enumerate_factorizations(n)) {
      const auto m = chain_of_factorization(w);
      const auto ow = to_oracle(w);
      for (int k = 0; k <= n - 1; ++k) {
        const auto blocks = oracle::orbits(oracle::fold(oracle::Word(ow.begin(), ow.begin() + k), n));
        if (m[k].blocks() != blocks) v.fail("chain entry " + std::to_string(k) + " of " + w.to_string());
      }
      if (!image.insert(m).second) v.fail("chain repeated at " + w.to_string());
    }
    const auto all = enumerate_maximal_chains(n);
    if (std::set<MaximalChain>(all.begin(), all.end()) != image) v.fail("chains of NC_" + std::to_string(n) + " not all hit");
    if (n == 6) chains6 = all.size();
  }
  if (chains6 != 1296) v.fail("n=6 has " + std::to_string(chains6) + " chains");
  if (v.pass) v.detail = "Catalan to n=10; 1296 chains at n=6";
  return v;
}

// 11. Worked examples.
Verdict fixtures() {
  Verdict v;
  const auto octagon = FactorSequence::parse("(7,8)(6,8)(5,8)(1,8)(1,2)(2,4)(2,3)");
  if (descent_set_direct(octagon) != IndexSet{1, 2, 3, 4, 6}) v.fail("octagon word descents " + descent_set_direct(octagon).to_string());
  if (main_index(octagon) != 4) v.fail("octagon word main index");

  const auto hexagon = FactorSequence::parse("(1,4)(4,6)(4,5)(1,2)(2,3)");
  if (!oracle::is_n_cycle_product(to_oracle(hexagon), 6) || !is_cycle_factorization(hexagon)) v.fail("hexagon word not in F_6");
  const auto tree = build_geometric_graph(hexagon);
  if (!is_caterpillar(tree) || is_convex_caterpillar(tree)) v.fail("hexagon word tree is not a non-convex caterpillar");
  const GYOrder order(tree);
  if (order.is_total()) v.fail("hexagon word order is total");
  // Closure of (1,4) < (4,6) < (4,5) and (1,4) < (1,2) < (2,3).
  std::set<std::pair<Chord, Chord>> want;
  for (const auto& chain : {std::vector<Chord>{{1, 4}, {4, 6}, {4, 5}}, std::vector<Chord>{{1, 4}, {1, 2}, {2, 3}}}) {
    for (std::size_t a = 0; a < chain.size(); ++a)
      for (std::size_t b = a + 1; b < chain.size(); ++b) want.emplace(chain[a], chain[b]);
  }
  const auto rel = order.relation_pairs();
  if (std::set<std::pair<Chord, Chord>>(rel.begin(), rel.end()) != want) v.fail("hexagon word order is not the two chains");

  const auto example = FactorSequence::parse("(4,5)(5,6)(3,6)(1,6)(1,2)");
  if (main_index(ConvexCaterpillar(example)) != 4) v.fail("main index example");
  if (oracle::first_with_one(to_oracle(example)) != 4) v.fail("oracle main index example");
  if (v.pass) v.detail = "octagon word, hexagon word and the main index example";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"|U_n| = n 2^(n-3), n = 2..12", counts_linear},
      {"|F_n| = n^(n-2), n = 2..7", counts_hurwitz},
      {"tree conditions iff product is the n-cycle, all words, n <= 6", gy_characterization},
      {"total order iff convex caterpillar iff one linear extension, n <= 7", linearity},
      {"Des(u) = Des(phi(u)) on U_n, n <= 10", descent_equivalence},
      {"|{c : Des(c) = J}| = |J|+1, n <= 10", distribution},
      {"(I, Des) injective, reconstruct inverts and rejects, n <= 10", reconstruction},
      {"Q(U_n) = sum (k+1) s_(n-1-k,1^k), Schur-positive, n = 2..10", hook_identity},
      {"|A_j| = 1 and labels permute [n-1], F_n, n <= 6", label_sets_singletons},
      {"|NC_n| = Catalan(n), n <= 10; F_n to maximal chains bijective, n <= 6", lattice},
      {"worked examples", fixtures},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    failed += v.pass ? 0 : 1;
    std::printf("criterion %2zu %s: %s [%s] (%.0f ms)\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                v.detail.c_str(), ms);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
