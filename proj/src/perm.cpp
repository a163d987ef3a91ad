#include "ncpos/perm.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ncpos/error.hpp"

namespace ncpos {

Transposition::Transposition(int a, int b) : a_(std::min(a, b)), b_(std::max(a, b)) {
  if (a == b) {
    throw InvalidArgument("transposition needs two distinct labels, got (" + std::to_string(a) +
                          "," + std::to_string(b) + ")");
  }
}

int Transposition::other(int x) const {
  if (x == a_) return b_;
  if (x == b_) return a_;
  throw InvalidArgument(std::to_string(x) + " is not a letter of " + to_string());
}

int Transposition::shared_letters(const Transposition& t) const {
  return static_cast<int>(contains(t.a_)) + static_cast<int>(contains(t.b_));
}

std::optional<int> Transposition::common_letter(const Transposition& t) const {
  if (shared_letters(t) != 1) return std::nullopt;
  return contains(t.a_) ? t.a_ : t.b_;
}

bool Transposition::is_cyclically_consecutive(int n) const {
  return b_ - a_ == 1 || (a_ == 1 && b_ == n);
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

Permutation::Permutation(int n) {
  if (n < 0) throw InvalidArgument("permutation size must be non-negative");
  images_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images_[static_cast<std::size_t>(i)] = i + 1;
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidArgument("not a bijection of [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_transposition(const Transposition& t, int n) {
  if (t.b() > n || t.a() < 1) {
    throw InvalidArgument(t.to_string() + " has a label outside [" + std::to_string(n) + "]");
  }
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(t.a() - 1)],
            p.images_[static_cast<std::size_t>(t.b() - 1)]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int x = c[k];
      if (x < 1 || x > n || images[static_cast<std::size_t>(x - 1)] != 0) {
        throw InvalidArgument("cycles are not disjoint labels of [" + std::to_string(n) + "]");
      }
      images[static_cast<std::size_t>(x - 1)] = c[(k + 1) % c.size()];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (images[static_cast<std::size_t>(i)] == 0) images[static_cast<std::size_t>(i)] = i + 1;
  }
  return from_images(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(n());
  for (int i = 1; i <= n(); ++i) r.images_[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return r;
}

void Permutation::apply_right(const Transposition& t) {
  if (t.b() > n()) throw InvalidArgument(t.to_string() + " is outside the ground set");
  std::swap(images_[static_cast<std::size_t>(t.a() - 1)], images_[static_cast<std::size_t>(t.b() - 1)]);
}

void Permutation::apply_left(const Transposition& t) {
  if (t.b() > n()) throw InvalidArgument(t.to_string() + " is outside the ground set");
  for (int& v : images_) {
    if (v == t.a()) {
      v = t.b();
    } else if (v == t.b()) {
      v = t.a();
    }
  }
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << images_[static_cast<std::size_t>(i)];
  os << ']';
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) {
    throw InvalidArgument("compose: ground sets differ (" + std::to_string(p.n()) + " vs " +
                          std::to_string(q.n()) + ")");
  }
  std::vector<int> images(static_cast<std::size_t>(p.n()));
  for (int x = 1; x <= p.n(); ++x) images[static_cast<std::size_t>(x - 1)] = p(q(x));
  return Permutation::from_images(std::move(images));
}

Permutation standard_cycle(int n) {
  if (n < 1) throw InvalidArgument("standard_cycle needs n >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i - 1)] = i == n ? 1 : i + 1;
  return Permutation::from_images(std::move(images));
}

Permutation product_of(const std::vector<Transposition>& factors, int n) {
  Permutation p(n);
  for (const auto& t : factors) p.apply_right(t);
  return p;
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(p.n()) + 1, false);
  for (int start = 1; start <= p.n(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    // start is the smallest unseen label, hence the cycle minimum.
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

IndexSet descent_set_of_permutation(const Permutation& p) {
  IndexSet d;
  for (int j = 1; j < p.n(); ++j) {
    if (p(j) > p(j + 1)) d.insert(j);
  }
  return d;
}

}  // namespace ncpos
