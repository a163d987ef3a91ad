#include "ncpos/qsym.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ncpos/error.hpp"

namespace ncpos {

PartitionShape::PartitionShape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must weakly decrease");
    size_ += parts_[i];
  }
}

PartitionShape PartitionShape::hook(int m, int k) {
  if (m < 1 || k < 0 || k > m - 1) throw InvalidArgument("hook needs 0 <= k <= m-1");
  std::vector<int> parts{m - k};
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return PartitionShape(std::move(parts));
}

std::string PartitionShape::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

std::strong_ordering PartitionShape::operator<=>(const PartitionShape& o) const {
  if (size_ != o.size_) return size_ <=> o.size_;
  // Reverse lexicographic: larger first parts come first.
  return std::lexicographical_compare_three_way(o.parts_.begin(), o.parts_.end(), parts_.begin(), parts_.end());
}

std::vector<PartitionShape> partitions_of(int m) {
  if (m < 0) throw InvalidArgument("partitions of a negative number");
  std::vector<PartitionShape> out;
  std::vector<int> parts;
  std::function<void(int, int)> walk = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      walk(remaining - p, p);
      parts.pop_back();
    }
  };
  walk(m, m);
  return out;
}

std::vector<StandardTableau> syt_enumerate(const PartitionShape& shape) {
  const auto& lambda = shape.parts();
  const int m = shape.size();
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(lambda.size());
  std::function<void(int)> place = [&](int next) {
    if (next > m) {
      out.push_back({shape, rows});
      return;
    }
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      const std::size_t len = rows[r].size();
      if (static_cast<int>(len) >= lambda[r]) continue;
      if (r > 0 && rows[r - 1].size() <= len) continue;
      rows[r].push_back(next);
      place(next + 1);
      rows[r].pop_back();
    }
  };
  place(1);
  return out;
}

IndexSet syt_descents(const StandardTableau& t) {
  const int m = t.shape.size();
  std::vector<int> row_of(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (int x : t.rows[r]) row_of[static_cast<std::size_t>(x)] = static_cast<int>(r);
  }
  IndexSet d;
  for (int i = 1; i < m; ++i) {
    if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)]) d.insert(i);
  }
  return d;
}

std::vector<IndexSet> hook_descent_census(int m, int k) {
  std::vector<IndexSet> out;
  for (const auto& t : syt_enumerate(PartitionShape::hook(m, k))) out.push_back(syt_descents(t));
  std::sort(out.begin(), out.end());
  return out;
}

long long QSymExpr::coefficient(const IndexSet& d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? 0 : it->second;
}

void QSymExpr::add(const IndexSet& d, long long c) {
  if (!d.within(degree_ - 1)) {
    throw InvalidArgument("subset " + d.to_string() + " is not inside [" + std::to_string(degree_ - 1) + "]");
  }
  if (c == 0) return;
  auto& slot = coeffs_[d];
  slot += c;
  if (slot == 0) coeffs_.erase(d);
}

QSymExpr& QSymExpr::operator+=(const QSymExpr& o) {
  if (o.degree_ != degree_ && !o.is_zero()) throw InvalidArgument("adding quasi-symmetric functions of different degrees");
  for (const auto& [d, c] : o.coeffs_) add(d, c);
  return *this;
}

QSymExpr QSymExpr::scaled(long long c) const {
  QSymExpr out(degree_);
  for (const auto& [d, v] : coeffs_) out.add(d, v * c);
  return out;
}

long long QSymExpr::mass() const {
  long long total = 0;
  for (const auto& [d, c] : coeffs_) total += c;
  return total;
}

std::string QSymExpr::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const long long a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << "F_{" << degree_ << ',' << d.to_string() << '}';
    first = false;
  }
  return os.str();
}

QSymExpr schur_in_fundamental(const PartitionShape& shape) {
  QSymExpr e(shape.size());
  for (const auto& t : syt_enumerate(shape)) e.add(syt_descents(t), 1);
  return e;
}

QSymExpr qsym_of_descent_multiset(int m, const std::vector<IndexSet>& descent_sets) {
  QSymExpr e(m);
  for (const auto& d : descent_sets) e.add(d, 1);
  return e;
}

bool SchurExpansion::integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const auto& kv) { return boost::multiprecision::denominator(kv.second) == 1; });
}

bool SchurExpansion::nonnegative() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second >= 0; });
}

Rational SchurExpansion::coefficient(const PartitionShape& shape) const {
  auto it = coeffs.find(shape);
  return it == coeffs.end() ? Rational(0) : it->second;
}

std::string SchurExpansion::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [shape, c] : coeffs) {
    if (!first) os << ", ";
    os << "s_" << shape.to_string() << ':' << c;
    first = false;
  }
  return os.str();
}

ExpansionResult expand_in_schur(const QSymExpr& e) {
  const int m = e.degree();
  if (m < 1) {
    if (e.is_zero()) return SchurExpansion{m, {}};
    return NotSymmetric{m, "degree must be positive"};
  }
  if (m - 1 > 24) throw InvalidArgument("degree too large for a dense solve");
  const auto shapes = partitions_of(m);
  const auto subsets = all_subsets(m - 1);
  const std::size_t rows = subsets.size();
  const std::size_t cols = shapes.size();

  // Augmented matrix: column per shape, last column the target.
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  std::map<IndexSet, std::size_t> row_of;
  for (std::size_t r = 0; r < rows; ++r) row_of[subsets[r]] = r;
  for (std::size_t c = 0; c < cols; ++c) {
    const QSymExpr s = schur_in_fundamental(shapes[c]);
    for (const auto& [d, v] : s.coeffs()) a[row_of.at(d)][c] = v;
  }
  for (const auto& [d, v] : e.coeffs()) a[row_of.at(d)][cols] = v;

  std::vector<std::size_t> pivot_row(cols, rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k <= cols; ++k) a[r][k] *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][c] == 0) continue;
      const Rational f = a[q][c];
      for (std::size_t k = c; k <= cols; ++k) a[q][k] -= f * a[r][k];
    }
    pivot_row[c] = r;
    ++r;
  }
  for (std::size_t q = r; q < rows; ++q) {
    if (a[q][cols] != 0) {
      return NotSymmetric{m, "no Schur combination matches the coefficient of F_{" + std::to_string(m) + "," +
                                 subsets[q].to_string() + "} after elimination"};
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row[c] == rows) throw InternalError("Schur expansions are not independent in degree " + std::to_string(m));
  }
  SchurExpansion out{m, {}};
  for (std::size_t c = 0; c < cols; ++c) {
    const Rational& v = a[pivot_row[c]][cols];
    if (v != 0) out.coeffs.emplace(shapes[c], v);
  }
  return out;
}

Polynomial monomial_truncation(const QSymExpr& e, int v) {
  if (v < 1) throw InvalidArgument("need at least one variable");
  const int m = e.degree();
  Polynomial out;
  std::vector<int> exps(static_cast<std::size_t>(v), 0);
  for (const auto& [d, c] : e.coeffs()) {
    std::function<void(int, int)> walk = [&](int pos, int prev) {
      if (pos > m) {
        auto& slot = out[exps];
        slot += c;
        if (slot == 0) out.erase(exps);
        return;
      }
      // Position pos follows pos-1; a strict rise is forced when pos-1 is in D.
      const int lo = pos == 1 ? 1 : (d.contains(pos - 1) ? prev + 1 : prev);
      for (int i = lo; i <= v; ++i) {
        ++exps[static_cast<std::size_t>(i - 1)];
        walk(pos + 1, i);
        --exps[static_cast<std::size_t>(i - 1)];
      }
    };
    walk(1, 1);
  }
  return out;
}

bool is_symmetric_polynomial(const Polynomial& p) {
  for (const auto& [exps, c] : p) {
    for (std::size_t i = 0; i + 1 < exps.size(); ++i) {
      auto swapped = exps;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = p.find(swapped);
      if (it == p.end() || it->second != c) return false;
    }
  }
  return true;
}

QSymExpr hook_identity_rhs(int n) {
  if (n < 2) throw InvalidArgument("hook identity needs n >= 2");
  QSymExpr out(n - 1);
  for (int k = 0; k <= n - 2; ++k) out += schur_in_fundamental(PartitionShape::hook(n - 1, k)).scaled(k + 1);
  return out;
}

}  // namespace ncpos
