#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncpos/index_set.hpp"

namespace ncpos {

using Rational = boost::multiprecision::cpp_rational;

/// A straight partition shape. Ordering is reverse lexicographic, so (3)
/// sorts before (2,1) before (1,1,1).
class PartitionShape {
 public:
  PartitionShape() = default;
  /// Throws unless parts are positive and weakly decreasing.
  explicit PartitionShape(std::vector<int> parts);

  /// (m - k, 1^k)
  static PartitionShape hook(int m, int k);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  std::string to_string() const;  ///< "(2,1)"

  bool operator==(const PartitionShape&) const = default;
  std::strong_ordering operator<=>(const PartitionShape& o) const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Partitions of m in reverse lexicographic order. m >= 0.
std::vector<PartitionShape> partitions_of(int m);

/// English convention: rows[r][c] is the entry in row r, column c.
struct StandardTableau {
  PartitionShape shape;
  std::vector<std::vector<int>> rows;
};

std::vector<StandardTableau> syt_enumerate(const PartitionShape& shape);
/// { i : i+1 sits in a lower row than i }
IndexSet syt_descents(const StandardTableau& t);

/// Sorted descent sets of all SYT of the hook (m-k, 1^k). 0 <= k <= m-1.
std::vector<IndexSet> hook_descent_census(int m, int k);

/// Integer combination of fundamental quasi-symmetric functions F_{m,D}.
class QSymExpr {
 public:
  explicit QSymExpr(int degree = 0) : degree_(degree) {}

  int degree() const { return degree_; }
  /// Nonzero coefficients keyed by D in [m-1].
  const std::map<IndexSet, long long>& coeffs() const { return coeffs_; }
  long long coefficient(const IndexSet& d) const;
  /// Throws InvalidArgument unless d lies in [m-1].
  void add(const IndexSet& d, long long c);
  QSymExpr& operator+=(const QSymExpr& o);
  QSymExpr scaled(long long c) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Sum of all coefficients.
  long long mass() const;
  std::string to_string() const;  ///< "F_{3,{1}} + 2F_{3,{2}}"

  bool operator==(const QSymExpr&) const = default;

 private:
  int degree_;
  std::map<IndexSet, long long> coeffs_;
};

/// Sum over SYT(shape) of F_{m, Des(T)}.
QSymExpr schur_in_fundamental(const PartitionShape& shape);

/// Sum with multiplicity of F_{m, D}. Each D must lie in [m-1].
QSymExpr qsym_of_descent_multiset(int m, const std::vector<IndexSet>& descent_sets);

/// Exact coefficients in the Schur basis.
struct SchurExpansion {
  int degree = 0;
  std::map<PartitionShape, Rational> coeffs;  ///< nonzero entries only

  bool integral() const;
  bool nonnegative() const;
  Rational coefficient(const PartitionShape& shape) const;
  std::string to_string() const;  ///< "s_(3):1, s_(2,1):2"
};

struct NotSymmetric {
  int degree = 0;
  std::string reason;
};

using ExpansionResult = std::variant<SchurExpansion, NotSymmetric>;

/// Solves e = sum m_lambda s_lambda over the rationals.
ExpansionResult expand_in_schur(const QSymExpr& e);

/// Exponent vector (length v) -> coefficient.
using Polynomial = std::map<std::vector<int>, long long>;

/// e evaluated in x_1..x_v: sum over weakly increasing index words with
/// strict rises at the positions in D.
Polynomial monomial_truncation(const QSymExpr& e, int v);

/// True iff swapping any two variables leaves the polynomial unchanged.
bool is_symmetric_polynomial(const Polynomial& p);

/// sum_{k=0}^{n-2} (k+1) s_{(n-1-k, 1^k)}, in degree n-1. n >= 2.
QSymExpr hook_identity_rhs(int n);

}  // namespace ncpos
