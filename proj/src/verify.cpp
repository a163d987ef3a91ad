#include "ncpos/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "ncpos/caterpillar.hpp"
#include "ncpos/error.hpp"
#include "ncpos/factorization.hpp"
#include "ncpos/geom_tree.hpp"
#include "ncpos/labeling.hpp"
#include "ncpos/ncpl.hpp"
#include "ncpos/qsym.hpp"

namespace ncpos {
namespace {

struct Outcome {
  long long cases = 0;
  bool pass = true;
  std::string detail;

  // Records the first failure only.
  void fail(std::string why) {
    if (pass) detail = std::move(why);
    pass = false;
  }
};

struct Check {
  std::string name;
  std::string statement;
  int limit;
  std::function<Outcome(int)> body;
};

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long long linear_count(int n) { return n == 2 ? 1 : n * ipow(2, n - 3); }

Outcome check_linear_count(int n) {
  Outcome o;
  const auto u = enumerate_linearly_ordered(n);
  o.cases = static_cast<long long>(u.size());
  if (o.cases != linear_count(n)) o.fail("found " + std::to_string(o.cases) + ", expected " + std::to_string(linear_count(n)));
  return o;
}

Outcome check_hurwitz_count(int n) {
  Outcome o;
  o.cases = static_cast<long long>(enumerate_factorizations(n).size());
  if (o.cases != ipow(n, n - 2)) o.fail("found " + std::to_string(o.cases) + ", expected " + std::to_string(ipow(n, n - 2)));
  return o;
}

Outcome check_caterpillar_words(int n) {
  Outcome o;
  const auto cats = enumerate_caterpillars(n);
  const auto u = enumerate_linearly_ordered(n);
  o.cases = static_cast<long long>(cats.size());
  if (cats.size() != u.size()) {
    o.fail("sizes differ: " + std::to_string(cats.size()) + " vs " + std::to_string(u.size()));
    return o;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(cats[i].word() == u[i])) {
      o.fail("first difference at " + u[i].to_string());
      break;
    }
  }
  return o;
}

Outcome check_gy_exhaustive(int n) {
  Outcome o;
  std::vector<Transposition> ts;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) ts.emplace_back(a, b);
  const std::size_t k = static_cast<std::size_t>(n - 1);
  std::vector<std::size_t> idx(k, 0);
  std::vector<Transposition> f(k, ts.front());
  while (true) {
    for (std::size_t i = 0; i < k; ++i) f[i] = ts[idx[i]];
    const FactorSequence w(n, f);
    ++o.cases;
    if (gy_conditions(w) != is_cycle_factorization(w)) o.fail("disagreement at " + w.to_string());
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == ts.size()) idx[pos++] = 0;
    if (pos == k) break;
  }
  return o;
}

Outcome check_gy_on_factorizations(int n) {
  Outcome o;
  for (const auto& w : enumerate_factorizations(n)) {
    ++o.cases;
    if (!gy_conditions(w)) o.fail(w.to_string() + " fails the tree conditions");
  }
  return o;
}

Outcome check_linearity(int n) {
  Outcome o;
  for (const auto& w : enumerate_factorizations(n)) {
    ++o.cases;
    const auto tree = build_geometric_graph(w);
    const GYOrder order(tree);
    const bool total = order.is_total();
    const bool convex = is_convex_caterpillar(tree);
    const bool unique = count_linear_extensions(order) == 1;
    const bool linear = is_linearly_ordered(w);
    if (total != convex || total != unique || total != linear) {
      o.fail(w.to_string() + ": total=" + std::to_string(total) + " convex=" + std::to_string(convex) +
             " unique=" + std::to_string(unique) + " linear=" + std::to_string(linear));
    }
  }
  return o;
}

Outcome check_label_sets(int n) {
  Outcome o;
  for (const auto& w : enumerate_factorizations(n)) {
    ++o.cases;
    try {
      const auto p = phi(w);
      if (p.n() != n - 1) o.fail(w.to_string() + " labels a permutation of the wrong size");
    } catch (const std::exception& e) {
      o.fail(w.to_string() + ": " + e.what());
    }
  }
  return o;
}

Outcome check_descent_equivalence(int n) {
  Outcome o;
  for (const auto& u : enumerate_linearly_ordered(n)) {
    ++o.cases;
    const auto a = descent_set_direct(u);
    const auto b = chain_descent(u);
    if (a != b) o.fail(u.to_string() + ": word " + a.to_string() + " vs chain " + b.to_string());
  }
  return o;
}

Outcome check_fast_labeling(int n) {
  Outcome o;
  for (const auto& c : enumerate_caterpillars(n)) {
    ++o.cases;
    if (!(phi_caterpillar_unchecked(c) == phi(c.word()))) o.fail(c.word().to_string());
  }
  return o;
}

Outcome check_distribution(int n) {
  Outcome o;
  for (const auto& [j, count] : descent_distribution(n)) {
    ++o.cases;
    if (count != j.size() + 1) {
      o.fail(j.to_string() + " occurs " + std::to_string(count) + " times, expected " + std::to_string(j.size() + 1));
    }
  }
  return o;
}

Outcome check_reconstruction(int n) {
  Outcome o;
  std::set<std::pair<int, IndexSet>> keys;
  for (const auto& c : enumerate_caterpillars(n)) {
    ++o.cases;
    const int i = main_index(c);
    const auto des = descent_set_direct(c.word());
    if (!keys.emplace(i, des).second) o.fail("repeated key at " + c.word().to_string());
    if (!(reconstruct(n, i, des) == c)) o.fail("reconstruct misses " + c.word().to_string());
  }
  for (const auto& j : all_subsets(n - 2)) {
    for (int i = 2; i <= n - 1; ++i) {
      if (j.contains(i - 1)) continue;
      ++o.cases;
      try {
        reconstruct(n, i, j);
        o.fail("accepted i=" + std::to_string(i) + ", J=" + j.to_string());
      } catch (const InvalidArgument&) {
      }
    }
  }
  return o;
}

QSymExpr q_of_linear(int n) {
  std::vector<IndexSet> des;
  for (const auto& u : enumerate_linearly_ordered(n)) des.push_back(descent_set_direct(u));
  return qsym_of_descent_multiset(n - 1, des);
}

Outcome check_hook_identity(int n) {
  Outcome o;
  const auto q = q_of_linear(n);
  const auto rhs = hook_identity_rhs(n);
  o.cases = static_cast<long long>(rhs.coeffs().size());
  if (!(q == rhs)) {
    o.fail("Q = " + q.to_string() + " but hooks give " + rhs.to_string());
    return o;
  }
  // Size-n hooks with weights 1..n would carry mass (n+1) 2^(n-2).
  o.detail = "degree " + std::to_string(n - 1) + " hooks, mass " + std::to_string(q.mass()) +
             "; size-" + std::to_string(n) + " hooks would need mass " + std::to_string((n + 1) * ipow(2, n - 2));
  return o;
}

Outcome check_schur_positivity(int n) {
  Outcome o;
  const auto r = expand_in_schur(q_of_linear(n));
  if (const auto* ns = std::get_if<NotSymmetric>(&r)) {
    o.fail("not symmetric: " + ns->reason);
    return o;
  }
  const auto& s = std::get<SchurExpansion>(r);
  for (const auto& shape : partitions_of(n - 1)) {
    ++o.cases;
    Rational want = 0;
    if (shape.length() == 1 || shape.parts()[1] == 1) want = shape.length();
    if (s.coefficient(shape) != want) o.fail("coefficient of s_" + shape.to_string() + " is " + s.coefficient(shape).str());
  }
  if (o.pass) o.detail = s.to_string();
  return o;
}

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

Outcome check_catalan(int n) {
  Outcome o;
  o.cases = static_cast<long long>(enumerate_noncrossing_partitions(n).size());
  if (o.cases != catalan(n)) o.fail("found " + std::to_string(o.cases) + ", expected " + std::to_string(catalan(n)));
  return o;
}

Outcome check_chain_bijection(int n) {
  Outcome o;
  std::set<MaximalChain> image;
  for (const auto& w : enumerate_factorizations(n)) {
    ++o.cases;
    if (!image.insert(chain_of_factorization(w)).second) o.fail("two factorizations share a chain, one is " + w.to_string());
  }
  const auto chains = enumerate_maximal_chains(n);
  if (std::set<MaximalChain>(chains.begin(), chains.end()) != image) {
    o.fail(std::to_string(chains.size()) + " chains against " + std::to_string(image.size()) + " factorizations");
  }
  return o;
}

const std::map<std::string, std::vector<Check>>& registry() {
  static const std::map<std::string, std::vector<Check>> r{
      {"counts",
       {{"linear-count", "|U_n| = n 2^(n-3)", 12, check_linear_count},
        {"hurwitz-count", "|F_n| = n^(n-2)", 8, check_hurwitz_count},
        {"caterpillar-words", "convex caterpillars built from branch flags are exactly U_n", 12,
         check_caterpillar_words}}},
      {"gy",
       {{"gy-exhaustive", "noncrossing tree with cyclically decreasing neighbours iff product is the n-cycle", 6,
         check_gy_exhaustive},
        {"gy-on-factorizations", "every factorization of the n-cycle meets the tree conditions", 8,
         check_gy_on_factorizations}}},
      {"linearity",
       {{"total-convex-unique", "GY order total iff convex caterpillar iff unique linear extension iff linearly ordered",
         7, check_linearity}}},
      {"descents",
       {{"label-sets", "every label set A_j is a singleton and the labels form a permutation", 7, check_label_sets},
        {"descent-equivalence", "Des(u) = Des(phi(u)) on U_n", 12, check_descent_equivalence},
        {"fast-labeling", "interval formula for phi agrees with suffix products", 12, check_fast_labeling}}},
      {"distribution",
       {{"descent-distribution", "each J in [n-2] is the descent set of |J|+1 caterpillars", 12, check_distribution},
        {"reconstruction", "(main index, descent set) determines the caterpillar; inadmissible pairs rejected", 12,
         check_reconstruction}}},
      {"schur",
       {{"hook-identity", "Q(U_n) = sum (k+1) s_(n-1-k,1^k) in degree n-1", 12, check_hook_identity},
        {"schur-positivity", "Schur coefficients are k+1 on hooks and 0 elsewhere", 12, check_schur_positivity}}},
      {"lattice",
       {{"catalan", "|NC_n| = Catalan(n)", 12, check_catalan},
        {"chain-bijection", "orbit chains give a bijection F_n to maximal chains of NC_n", 7,
         check_chain_bijection}}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"counts", "gy", "linearity", "descents", "distribution", "schur",
                                              "lattice"};
  return names;
}

int suite_limit(const std::string& suite) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw InvalidArgument("unknown suite '" + suite + "'");
  int limit = 0;
  for (const auto& c : it->second) limit = std::max(limit, c.limit);
  return limit;
}

std::vector<CheckResult> run_suite(const std::string& suite, int lo, int hi) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw InvalidArgument("unknown suite '" + suite + "'");
  if (lo < 2) throw InvalidArgument("checks start at n = 2");
  std::vector<CheckResult> out;
  for (const auto& check : it->second) {
    for (int n = lo; n <= hi; ++n) {
      CheckResult r;
      r.suite = suite;
      r.check = check.name;
      r.statement = check.statement;
      r.n = n;
      if (n > check.limit) {
        r.skipped = true;
        r.pass = true;
        r.detail = "beyond exhaustive limit " + std::to_string(check.limit);
        out.push_back(std::move(r));
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      const Outcome o = check.body(n);
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      r.cases = o.cases;
      r.pass = o.pass;
      r.detail = o.detail;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace ncpos
