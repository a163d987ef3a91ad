#include "doctest.h"
#include "ncpos/error.hpp"
#include "ncpos/perm.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>

using namespace ncpos;

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("transpositions are stored canonically") {
  const Transposition t(5, 2);
  CHECK(t.a() == 2);
  CHECK(t.b() == 5);
  CHECK(t == Transposition(2, 5));
  CHECK(t.other(2) == 5);
  CHECK_THROWS_AS(Transposition(3, 3), InvalidArgument);
  CHECK(Transposition(1, 2).common_letter(Transposition(2, 3)) == 2);
  CHECK_FALSE(Transposition(1, 2).common_letter(Transposition(1, 2)).has_value());
  CHECK(Transposition(1, 8).is_cyclically_consecutive(8));
  CHECK_FALSE(Transposition(1, 7).is_cyclically_consecutive(8));
}

TEST_CASE("compose applies the right factor first") {
  const auto p = Permutation::from_transposition({1, 2}, 3);
  const auto q = Permutation::from_transposition({2, 3}, 3);
  const auto r = compose(p, q);
  CHECK(r(1) == 2);
  CHECK(r(2) == 3);
  CHECK(r(3) == 1);
  CHECK(r == standard_cycle(3));
  CHECK(compose(p, Permutation(3)) == p);
  CHECK_THROWS_AS(compose(p, Permutation(4)), InvalidArgument);
}

TEST_CASE("compose is associative on S_4") {
  const auto all = all_permutations(4);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("product_of agrees with a pointwise fold") {
  const std::vector<Transposition> octagon{{7, 8}, {6, 8}, {5, 8}, {1, 8}, {1, 2}, {2, 4}, {2, 3}};
  CHECK(product_of(octagon, 8) == standard_cycle(8));

  oracle::Word w;
  for (const auto& t : octagon) w.emplace_back(t.a(), t.b());
  const auto img = oracle::fold(w, 8);
  for (int x = 1; x <= 8; ++x) CHECK(product_of(octagon, 8)(x) == img[static_cast<std::size_t>(x)]);
}

TEST_CASE("standard_cycle") {
  CHECK(standard_cycle(1).is_identity());
  CHECK(standard_cycle(3).images() == std::vector<int>{2, 3, 1});
  CHECK(standard_cycle(8).images() == std::vector<int>{2, 3, 4, 5, 6, 7, 8, 1});
  CHECK_THROWS_AS(standard_cycle(0), InvalidArgument);
}

TEST_CASE("cycle_decomposition") {
  using Cycles = std::vector<std::vector<int>>;
  CHECK(cycle_decomposition(Permutation(4)) == Cycles{{1}, {2}, {3}, {4}});
  CHECK(cycle_decomposition(standard_cycle(5)) == Cycles{{1, 2, 3, 4, 5}});
  const auto p = product_of({{7, 8}, {6, 8}, {5, 8}}, 8);
  CHECK(cycle_decomposition(p) == Cycles{{1}, {2}, {3}, {4}, {5, 6, 7, 8}});

  SUBCASE("round trip through from_cycles on S_5") {
    for (const auto& q : all_permutations(5)) {
      REQUIRE(Permutation::from_cycles(5, cycle_decomposition(q)) == q);
    }
  }
}

TEST_CASE("descent_set_of_permutation") {
  CHECK(descent_set_of_permutation(Permutation(4)).empty());
  CHECK(descent_set_of_permutation(Permutation::from_images({2, 1})) == IndexSet{1});
  CHECK(descent_set_of_permutation(Permutation::from_images({3, 1, 4, 2})) == IndexSet{1, 3});
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), InvalidArgument);
}

TEST_CASE("cyclic order") {
  CHECK(cyclic_less(4, 5, 1, 6));  // 4 <_4 5 <_4 6 <_4 1
  CHECK_FALSE(cyclic_less(4, 1, 6, 6));
  CHECK(wrap_label(0, 8) == 8);
  CHECK(wrap_label(9, 8) == 1);
  CHECK(wrap_label(-1, 8) == 7);
}

TEST_CASE("IndexSet") {
  IndexSet s{3, 1};
  CHECK(s.members() == std::vector<int>{1, 3});
  CHECK(s.to_string() == "{1,3}");
  CHECK(IndexSet{}.to_string() == "{}");
  CHECK(IndexSet{1} < IndexSet{1, 2});
  CHECK(IndexSet{1, 2} < IndexSet{2});
  CHECK(s.within(3));
  CHECK_FALSE(s.within(2));
  CHECK(all_subsets(3).size() == 8);
  CHECK_THROWS_AS(s.insert(0), InvalidArgument);
}
