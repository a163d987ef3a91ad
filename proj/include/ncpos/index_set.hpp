#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ncpos {

/// A finite subset of {1, ..., 63}, stored as a bitmask.
///
/// Used for descent sets of words, permutations and tableaux, and as the
/// key of fundamental quasi-symmetric coordinates. Ordering compares the
/// sorted member lists lexicographically, with shorter prefixes first, so
/// that printed tables come out in the natural order.
class IndexSet {
 public:
  static constexpr int kMaxElement = 63;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> members);
  explicit IndexSet(const std::vector<int>& members);

  static IndexSet from_mask(std::uint64_t mask) {
    IndexSet s;
    s.mask_ = mask & ~std::uint64_t{1};
    return s;
  }
  /// {1, ..., k}
  static IndexSet interval(int k);

  bool contains(int i) const {
    return i >= 1 && i <= kMaxElement && ((mask_ >> i) & 1U) != 0;
  }
  void insert(int i);
  void erase(int i);

  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  /// Largest member, or 0 for the empty set.
  int max() const { return mask_ == 0 ? 0 : 63 - std::countl_zero(mask_); }
  bool subset_of(const IndexSet& other) const { return (mask_ & ~other.mask_) == 0; }
  /// True iff every member lies in {1, ..., bound}.
  bool within(int bound) const { return max() <= bound; }

  std::uint64_t mask() const { return mask_; }
  std::vector<int> members() const;
  /// "{1,2,4}"; the empty set prints as "{}".
  std::string to_string() const;

  bool operator==(const IndexSet& other) const = default;
  std::strong_ordering operator<=>(const IndexSet& other) const;

 private:
  std::uint64_t mask_ = 0;  // bit i set iff i is a member; bit 0 unused
};

/// All subsets of {1, ..., bound}, in increasing mask order.
std::vector<IndexSet> all_subsets(int bound);

}  // namespace ncpos
