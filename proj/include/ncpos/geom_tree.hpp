#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncpos/error.hpp"
#include "ncpos/factorization.hpp"
#include "ncpos/perm.hpp"

namespace ncpos {

/// Why a set of chords failed to be a non-crossing spanning tree.
class GeometryError : public InvalidArgument {
 public:
  enum class Kind { kLabelOutOfRange, kWrongEdgeCount, kDuplicateChord, kCycle, kCrossing };

  GeometryError(Kind kind, std::vector<Chord> offending, const std::string& what)
      : InvalidArgument(what), kind_(kind), offending_(std::move(offending)) {}

  Kind kind() const { return kind_; }
  /// The crossing pair, the repeated chord, or the chords of the cycle.
  const std::vector<Chord>& offending() const { return offending_; }

 private:
  Kind kind_;
  std::vector<Chord> offending_;
};

/// {start, start+1, ..., end} taken mod n.
struct CyclicInterval {
  int n = 0;
  int start = 0;
  int end = 0;

  bool contains(int x) const { return cyclic_rank(start, x, n) <= cyclic_rank(start, end, n); }
  int size() const { return cyclic_rank(start, end, n) + 1; }
  std::vector<int> members() const;
  std::string to_string() const;  ///< "[7,2]"

  bool operator==(const CyclicInterval&) const = default;
};

/// The cyclic interval whose members are exactly `labels`, if there is one.
/// The full set [n] is reported starting at 1.
std::optional<CyclicInterval> as_cyclic_interval(const std::vector<int>& labels, int n);

/// True iff the chords have four distinct endpoints that interleave around
/// the polygon. Purely combinatorial.
bool chords_cross(const Chord& e, const Chord& f, int n);

/// A non-crossing spanning tree on the vertices 1..n of a convex polygon,
/// labeled clockwise. Edges are kept sorted.
class GeometricTree {
 public:
  /// Throws GeometryError unless `edges` is a non-crossing tree on [n].
  GeometricTree(int n, std::vector<Chord> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Chord>& edges() const { return edges_; }
  const Chord& edge(int idx) const { return edges_[static_cast<std::size_t>(idx)]; }
  /// Position of e in edges(), if present.
  std::optional<int> index_of(const Chord& e) const;

  int degree(int v) const { return static_cast<int>(incident_[static_cast<std::size_t>(v)].size()); }
  bool is_leaf(int v) const { return degree(v) == 1; }
  /// Indices of edges incident to v.
  const std::vector<int>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }

  bool operator==(const GeometricTree& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_;
  std::vector<Chord> edges_;
  std::vector<std::vector<int>> incident_;  // indexed by vertex label, slot 0 unused
};

/// G(w): the chords of w's factors. Throws GeometryError when they do not
/// form a non-crossing tree.
GeometricTree build_geometric_graph(const FactorSequence& w);

/// Pairs (e, f) sharing a vertex x with other(e) >_x other(f); e precedes f.
std::vector<std::pair<Chord, Chord>> gy_generating_relation(const GeometricTree& tree);

/// The strict Goulden-Yong order on the edges of a tree.
class GYOrder {
 public:
  /// Transitive closure of the generating relation. Throws InternalError if
  /// the closure is not antisymmetric.
  explicit GYOrder(const GeometricTree& tree);

  const GeometricTree& tree() const { return tree_; }
  int size() const { return tree_.edge_count(); }

  /// Strict relation by edge index.
  bool less(int i, int j) const { return ((below_[static_cast<std::size_t>(j)] >> i) & 1U) != 0; }
  bool less(const Chord& e, const Chord& f) const;
  bool comparable(int i, int j) const { return i == j || less(i, j) || less(j, i); }
  bool is_total() const;

  /// Bitmask of edge indices strictly below edge j.
  std::uint64_t predecessors(int j) const { return below_[static_cast<std::size_t>(j)]; }

  /// All pairs e < f, sorted.
  std::vector<std::pair<Chord, Chord>> relation_pairs() const;

 private:
  GeometricTree tree_;
  std::vector<std::uint64_t> below_;
};

GYOrder gy_partial_order(const GeometricTree& tree);

/// Every topological sort of the GY order, each as a factor sequence, in
/// lexicographic order. Throws InvalidArgument past `cap` results.
std::vector<FactorSequence> linear_extensions(const GeometricTree& tree,
                                              std::size_t cap = 1'000'000);

/// Number of linear extensions, stopping early once `cap` is reached.
std::size_t count_linear_extensions(const GYOrder& order, std::size_t cap = 1'000'000);

/// Leaf-deleted subgraph is a path (possibly a single vertex or empty).
bool is_caterpillar(const GeometricTree& tree);

/// A caterpillar whose spine edges join cyclically consecutive labels and
/// together cover a cyclic interval. Stars and single edges qualify.
bool is_convex_caterpillar(const GeometricTree& tree);

/// Edges of the leaf-deleted subgraph, ordered along the path. Empty for
/// stars and single edges. When every spine edge is a link the path is
/// listed in increasing cyclic direction; otherwise from its smaller end.
/// Throws InvalidArgument if the tree is not a caterpillar.
std::vector<Chord> spine(const GeometricTree& tree);

enum class EdgeKind { kNeither, kBranch, kLink, kBoth };

/// Branch: an endpoint is a leaf. Link: endpoints cyclically consecutive.
EdgeKind classify_edge(const GeometricTree& tree, const Chord& e);

std::string to_string(EdgeKind kind);

}  // namespace ncpos
