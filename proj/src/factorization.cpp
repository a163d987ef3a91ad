#include "ncpos/factorization.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "ncpos/error.hpp"
#include "ncpos/geom_tree.hpp"
#include "ncpos/ncpl.hpp"

namespace ncpos {

FactorSequence::FactorSequence(int n, std::vector<Transposition> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n < 1) throw InvalidArgument("factor sequence needs n >= 1");
  for (const auto& t : factors_) {
    if (t.b() > n) {
      throw InvalidArgument("factor " + t.to_string() + " has a label outside [" +
                            std::to_string(n) + "]");
    }
  }
}

FactorSequence FactorSequence::parse(std::string_view text, int n) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  std::vector<Transposition> factors;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidArgument("cannot parse word \"" + std::string(text) + "\": " + why);
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || pos - start > 6) fail("expected a label at offset " + std::to_string(start));
    return std::stoi(s.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  while (pos < s.size()) {
    expect('(');
    const int a = read_int();
    expect(',');
    const int b = read_int();
    expect(')');
    if (a < 1 || b < 1) fail("labels are 1-based");
    if (a == b) fail("repeated letter in (" + std::to_string(a) + "," + std::to_string(b) + ")");
    factors.emplace_back(a, b);
  }
  if (n == 0) n = static_cast<int>(factors.size()) + 1;
  return FactorSequence(n, std::move(factors));
}

std::string FactorSequence::to_string() const {
  std::string s;
  for (const auto& t : factors_) s += t.to_string();
  return s;
}

bool is_noncrossing_cycle_permutation(const Permutation& p) {
  const auto cycles = cycle_decomposition(p);
  for (const auto& c : cycles) {
    if (!std::is_sorted(c.begin(), c.end())) return false;
  }
  return is_noncrossing(p.n(), cycles);
}

bool is_cycle_factorization(const FactorSequence& w) {
  if (w.size() != w.n() - 1) {
    throw InvalidArgument("expected " + std::to_string(w.n() - 1) + " factors, got " +
                          std::to_string(w.size()));
  }
  return w.product() == standard_cycle(w.n());
}

namespace {

std::vector<Transposition> all_transpositions(int n) {
  std::vector<Transposition> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
  }
  return out;
}

// Depth-first search over prefixes whose product stays below the n-cycle in
// absolute order. Every such prefix extends, so the search has no dead ends
// beyond those introduced by `admissible`.
std::vector<FactorSequence> search_factorizations(
    int n, const std::function<bool(const std::vector<Transposition>&, const Transposition&)>& admissible) {
  if (n < 2) throw InvalidArgument("factorizations need n >= 2");
  const auto letters = all_transpositions(n);
  std::vector<FactorSequence> out;
  std::vector<Transposition> prefix;
  Permutation product(n);

  std::function<void()> walk = [&]() {
    if (static_cast<int>(prefix.size()) == n - 1) {
      if (product != standard_cycle(n)) {
        throw InternalError("search produced a non-factorization");
      }
      out.emplace_back(n, prefix);
      return;
    }
    for (const auto& t : letters) {
      if (!admissible(prefix, t)) continue;
      // Right multiplication by (a,b) merges two cycles iff a and b lie in
      // different cycles; then the orbit count drops by one.
      int y = product(t.a());
      while (y != t.a() && y != t.b()) y = product(y);
      if (y == t.b()) continue;
      product.apply_right(t);
      // The canonical-cycle test keeps the prefix completable.
      if (is_noncrossing_cycle_permutation(product)) {
        prefix.push_back(t);
        walk();
        prefix.pop_back();
      }
      product.apply_right(t);
    }
  };
  walk();
  return out;
}

}  // namespace

std::vector<FactorSequence> enumerate_factorizations(int n) {
  return search_factorizations(n, [](const auto&, const auto&) { return true; });
}

bool is_linearly_ordered(const FactorSequence& w) {
  if (!is_cycle_factorization(w)) {
    throw InvalidArgument("word " + w.to_string() + " is not a factorization of the " +
                          std::to_string(w.n()) + "-cycle");
  }
  for (int i = 1; i < w.size(); ++i) {
    const int shared = w.at(i).shared_letters(w.at(i + 1));
    if (shared == 2) {
      throw InvalidArgument("adjacent factors " + w.at(i).to_string() + " coincide");
    }
    if (shared == 0) return false;
  }
  return true;
}

std::vector<FactorSequence> enumerate_linearly_ordered(int n) {
  return search_factorizations(n, [](const std::vector<Transposition>& prefix, const Transposition& t) {
    return prefix.empty() || prefix.back().shared_letters(t) == 1;
  });
}

bool gy_conditions(const FactorSequence& w) {
  const int n = w.n();
  try {
    // Tree and non-crossing.
    (void)build_geometric_graph(w);
  } catch (const GeometryError&) {
    return false;
  }
  // Cyclically decreasing neighbors: for i < j sharing a, t_i = (a,c),
  // t_j = (a,b) forces c >_a b.
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      const auto a = w.at(i).common_letter(w.at(j));
      if (!a) continue;
      const int c = w.at(i).other(*a);
      const int b = w.at(j).other(*a);
      if (!cyclic_less(*a, b, c, n)) return false;
    }
  }
  return true;
}

}  // namespace ncpos
