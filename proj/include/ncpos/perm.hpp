#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ncpos/index_set.hpp"

namespace ncpos {

/// Position of y in the cyclic order starting at base on [n]:
/// base has rank 0, base+1 rank 1, ..., base-1 rank n-1.
inline int cyclic_rank(int base, int y, int n) { return ((y - base) % n + n) % n; }

/// x <_base y in the linear order base < base+1 < ... < base-1 (mod n).
inline bool cyclic_less(int base, int x, int y, int n) {
  return cyclic_rank(base, x, n) < cyclic_rank(base, y, n);
}

/// Representative of x in 1..n.
inline int wrap_label(int x, int n) { return ((x - 1) % n + n) % n + 1; }

/// Unordered pair {a, b} of distinct labels, stored with a < b.
///
/// Doubles as a chord of the labeled polygon in the geometric modules.
class Transposition {
 public:
  Transposition(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }

  bool contains(int x) const { return x == a_ || x == b_; }
  /// The endpoint that is not x. x must be an endpoint.
  int other(int x) const;
  /// Number of labels shared with t (0, 1 or 2).
  int shared_letters(const Transposition& t) const;
  /// The single shared label, if exactly one is shared.
  std::optional<int> common_letter(const Transposition& t) const;
  /// True iff the labels are cyclically consecutive in [n].
  bool is_cyclically_consecutive(int n) const;

  std::string to_string() const;

  bool operator==(const Transposition&) const = default;
  auto operator<=>(const Transposition&) const = default;

 private:
  int a_;
  int b_;
};

using Chord = Transposition;

/// A bijection of [n] = {1, ..., n}.
class Permutation {
 public:
  /// Identity on [n]; n >= 0.
  explicit Permutation(int n = 0);

  /// images[i-1] is the image of i. Throws unless this is a bijection of [n].
  static Permutation from_images(std::vector<int> images);
  /// The permutation that swaps t.a() and t.b() on [n].
  static Permutation from_transposition(const Transposition& t, int n);
  /// Inverse of cycle_decomposition: each cycle maps c[k] to c[k+1].
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Multiply on the right by the transposition t, in place (t acts first).
  void apply_right(const Transposition& t);
  /// Multiply on the left by the transposition t, in place (t acts last).
  void apply_left(const Transposition& t);

  std::string to_string() const;  ///< one-line notation "[2,3,1]"

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// r(x) = p(q(x)); the right factor acts first. Throws on mismatched sizes.
Permutation compose(const Permutation& p, const Permutation& q);

/// The n-cycle i -> i+1, n -> 1. Throws for n < 1.
Permutation standard_cycle(int n);

/// Product t_1 t_2 ... t_k on [n] with t_k applied first.
Permutation product_of(const std::vector<Transposition>& factors, int n);

/// Disjoint cycles covering [n], fixed points included. Each cycle starts at
/// its minimum; cycles are sorted by their minima.
std::vector<std::vector<int>> cycle_decomposition(const Permutation& p);

/// { j in [m-1] : p(j) > p(j+1) } for p on [m].
IndexSet descent_set_of_permutation(const Permutation& p);

}  // namespace ncpos
