#include "ncpos/index_set.hpp"

#include <algorithm>
#include <sstream>

#include "ncpos/error.hpp"

namespace ncpos {

IndexSet::IndexSet(std::initializer_list<int> members) {
  for (int i : members) insert(i);
}

IndexSet::IndexSet(const std::vector<int>& members) {
  for (int i : members) insert(i);
}

IndexSet IndexSet::interval(int k) {
  IndexSet s;
  for (int i = 1; i <= k; ++i) s.insert(i);
  return s;
}

void IndexSet::insert(int i) {
  if (i < 1 || i > kMaxElement) {
    throw InvalidArgument("index set element out of range: " + std::to_string(i));
  }
  mask_ |= std::uint64_t{1} << i;
}

void IndexSet::erase(int i) {
  if (i >= 1 && i <= kMaxElement) mask_ &= ~(std::uint64_t{1} << i);
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : members()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

std::strong_ordering IndexSet::operator<=>(const IndexSet& other) const {
  if (mask_ == other.mask_) return std::strong_ordering::equal;
  const auto a = members();
  const auto b = other.members();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<IndexSet> all_subsets(int bound) {
  if (bound < 0) bound = 0;
  if (bound > 30) throw InvalidArgument("all_subsets: bound too large");
  std::vector<IndexSet> out;
  out.reserve(std::size_t{1} << bound);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << bound); ++m) {
    out.push_back(IndexSet::from_mask(m << 1));
  }
  return out;
}

}  // namespace ncpos
