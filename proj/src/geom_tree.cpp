#include "ncpos/geom_tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace ncpos {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Chords on the unique forest path from u to v.
std::vector<Chord> forest_path(int n, const std::vector<Chord>& forest, int u, int v) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& e : forest) {
    adj[static_cast<std::size_t>(e.a())].push_back(e.b());
    adj[static_cast<std::size_t>(e.b())].push_back(e.a());
  }
  std::vector<int> prev(static_cast<std::size_t>(n) + 1, 0);
  std::queue<int> q;
  q.push(u);
  prev[static_cast<std::size_t>(u)] = u;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (prev[static_cast<std::size_t>(y)] == 0) {
        prev[static_cast<std::size_t>(y)] = x;
        q.push(y);
      }
    }
  }
  std::vector<Chord> path;
  for (int x = v; x != u; x = prev[static_cast<std::size_t>(x)]) {
    path.emplace_back(x, prev[static_cast<std::size_t>(x)]);
  }
  return path;
}

std::string join(const std::vector<Chord>& chords) {
  std::string s;
  for (const auto& c : chords) s += c.to_string();
  return s;
}

}  // namespace

std::vector<int> CyclicInterval::members() const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k) out.push_back(wrap_label(start + k, n));
  return out;
}

std::string CyclicInterval::to_string() const {
  return "[" + std::to_string(start) + "," + std::to_string(end) + "]";
}

std::optional<CyclicInterval> as_cyclic_interval(const std::vector<int>& labels, int n) {
  if (labels.empty() || n < 1) return std::nullopt;
  std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
  int count = 0;
  for (int x : labels) {
    if (x < 1 || x > n) return std::nullopt;
    if (!in[static_cast<std::size_t>(x)]) ++count;
    in[static_cast<std::size_t>(x)] = true;
  }
  if (count == n) return CyclicInterval{n, 1, n};
  // The start is the unique member whose predecessor is missing.
  int start = 0;
  for (int x = 1; x <= n; ++x) {
    if (in[static_cast<std::size_t>(x)] && !in[static_cast<std::size_t>(wrap_label(x - 1, n))]) {
      if (start != 0) return std::nullopt;
      start = x;
    }
  }
  return CyclicInterval{n, start, wrap_label(start + count - 1, n)};
}

bool chords_cross(const Chord& e, const Chord& f, int n) {
  (void)n;  // labels already sit on a line cut at n|1
  if (e.shared_letters(f) != 0) return false;
  const bool c_inside = e.a() < f.a() && f.a() < e.b();
  const bool d_inside = e.a() < f.b() && f.b() < e.b();
  return c_inside != d_inside;
}

GeometricTree::GeometricTree(int n, std::vector<Chord> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InvalidArgument("geometric tree needs n >= 1");
  for (const auto& e : edges_) {
    if (e.b() > n) {
      throw GeometryError(GeometryError::Kind::kLabelOutOfRange, {e},
                          "chord " + e.to_string() + " has a label outside [" + std::to_string(n) + "]");
    }
  }
  if (static_cast<int>(edges_.size()) != n - 1) {
    throw GeometryError(GeometryError::Kind::kWrongEdgeCount, {},
                        "a tree on " + std::to_string(n) + " vertices needs " +
                            std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) {
      throw GeometryError(GeometryError::Kind::kDuplicateChord, {edges_[i]},
                          "chord " + edges_[i].to_string() + " appears twice");
    }
  }
  DisjointSets dsu(n);
  std::vector<Chord> forest;
  for (const auto& e : edges_) {
    if (!dsu.unite(e.a(), e.b())) {
      auto cycle = forest_path(n, forest, e.a(), e.b());
      cycle.push_back(e);
      throw GeometryError(GeometryError::Kind::kCycle, cycle, "chords close a cycle: " + join(cycle));
    }
    forest.push_back(e);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (chords_cross(edges_[i], edges_[j], n)) {
        throw GeometryError(GeometryError::Kind::kCrossing, {edges_[i], edges_[j]},
                            "chords " + edges_[i].to_string() + " and " + edges_[j].to_string() + " cross");
      }
    }
  }
  incident_.resize(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    incident_[static_cast<std::size_t>(edges_[i].a())].push_back(static_cast<int>(i));
    incident_[static_cast<std::size_t>(edges_[i].b())].push_back(static_cast<int>(i));
  }
}

std::optional<int> GeometricTree::index_of(const Chord& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

GeometricTree build_geometric_graph(const FactorSequence& w) {
  return GeometricTree(w.n(), w.factors());
}

std::vector<std::pair<Chord, Chord>> gy_generating_relation(const GeometricTree& tree) {
  std::vector<std::pair<Chord, Chord>> out;
  const int n = tree.n();
  for (int x = 1; x <= n; ++x) {
    for (int i : tree.incident(x)) {
      for (int j : tree.incident(x)) {
        if (i == j) continue;
        const Chord& e = tree.edge(i);
        const Chord& f = tree.edge(j);
        // e = (x, z) precedes f = (x, y) when z >_x y.
        if (cyclic_less(x, f.other(x), e.other(x), n)) out.emplace_back(e, f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GYOrder::GYOrder(const GeometricTree& tree) : tree_(tree) {
  const int m = tree_.edge_count();
  if (m > 63) throw InvalidArgument("GY order supports at most 63 edges");
  below_.assign(static_cast<std::size_t>(m), 0);
  for (const auto& [e, f] : gy_generating_relation(tree_)) {
    const int i = *tree_.index_of(e);
    const int j = *tree_.index_of(f);
    below_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
  }
  // Warshall: if k < j then everything below k is below j.
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      if ((below_[static_cast<std::size_t>(j)] >> k) & 1U) {
        below_[static_cast<std::size_t>(j)] |= below_[static_cast<std::size_t>(k)];
      }
    }
  }
  for (int j = 0; j < m; ++j) {
    if ((below_[static_cast<std::size_t>(j)] >> j) & 1U) {
      throw InternalError("GY relation has a cycle through edge " + tree_.edge(j).to_string());
    }
  }
}

bool GYOrder::less(const Chord& e, const Chord& f) const {
  const auto i = tree_.index_of(e);
  const auto j = tree_.index_of(f);
  if (!i || !j) throw InvalidArgument("chord is not an edge of the tree");
  return less(*i, *j);
}

bool GYOrder::is_total() const {
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (!comparable(i, j)) return false;
    }
  }
  return true;
}

std::vector<std::pair<Chord, Chord>> GYOrder::relation_pairs() const {
  std::vector<std::pair<Chord, Chord>> out;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) {
      if (less(i, j)) out.emplace_back(tree_.edge(i), tree_.edge(j));
    }
  }
  return out;
}

GYOrder gy_partial_order(const GeometricTree& tree) { return GYOrder(tree); }

std::vector<FactorSequence> linear_extensions(const GeometricTree& tree, std::size_t cap) {
  const GYOrder order(tree);
  const int m = order.size();
  std::vector<FactorSequence> out;
  std::vector<Transposition> prefix;
  std::function<void(std::uint64_t)> walk = [&](std::uint64_t placed) {
    if (static_cast<int>(prefix.size()) == m) {
      if (out.size() >= cap) {
        throw InvalidArgument("more than " + std::to_string(cap) + " linear extensions");
      }
      out.emplace_back(tree.n(), prefix);
      return;
    }
    for (int j = 0; j < m; ++j) {
      if ((placed >> j) & 1U) continue;
      if ((order.predecessors(j) & ~placed) != 0) continue;
      prefix.push_back(tree.edge(j));
      walk(placed | (std::uint64_t{1} << j));
      prefix.pop_back();
    }
  };
  walk(0);
  return out;
}

std::size_t count_linear_extensions(const GYOrder& order, std::size_t cap) {
  const int m = order.size();
  std::size_t count = 0;
  std::function<void(std::uint64_t, int)> walk = [&](std::uint64_t placed, int depth) {
    if (count >= cap) return;
    if (depth == m) {
      ++count;
      return;
    }
    for (int j = 0; j < m; ++j) {
      if ((placed >> j) & 1U) continue;
      if ((order.predecessors(j) & ~placed) != 0) continue;
      walk(placed | (std::uint64_t{1} << j), depth + 1);
    }
  };
  walk(0, 0);
  return count;
}

namespace {

// Non-leaf vertices and the edges between them.
struct LeafDeleted {
  std::vector<int> vertices;
  std::vector<Chord> edges;
};

LeafDeleted delete_leaves(const GeometricTree& tree) {
  LeafDeleted out;
  for (int v = 1; v <= tree.n(); ++v) {
    if (tree.degree(v) > 1) out.vertices.push_back(v);
  }
  for (const auto& e : tree.edges()) {
    if (tree.degree(e.a()) > 1 && tree.degree(e.b()) > 1) out.edges.push_back(e);
  }
  return out;
}

bool is_path(const LeafDeleted& g, int n) {
  if (g.vertices.size() <= 1) return true;
  // A subtree of a tree: connected and acyclic, so a path iff max degree <= 2.
  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : g.edges) {
    if (++deg[static_cast<std::size_t>(e.a())] > 2 || ++deg[static_cast<std::size_t>(e.b())] > 2) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_caterpillar(const GeometricTree& tree) { return is_path(delete_leaves(tree), tree.n()); }

std::vector<Chord> spine(const GeometricTree& tree) {
  const auto g = delete_leaves(tree);
  const int n = tree.n();
  if (!is_path(g, n)) throw InvalidArgument("tree is not a caterpillar");
  if (g.edges.empty()) return {};

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.a())].push_back(e.b());
    adj[static_cast<std::size_t>(e.b())].push_back(e.a());
  }
  std::vector<int> ends;
  for (int v : g.vertices) {
    if (adj[static_cast<std::size_t>(v)].size() == 1) ends.push_back(v);
  }
  const bool all_links = std::all_of(g.edges.begin(), g.edges.end(),
                                     [n](const Chord& e) { return e.is_cyclically_consecutive(n); });
  int start = std::min(ends[0], ends[1]);
  if (all_links) {
    // Start at the end whose neighbor is its cyclic successor.
    for (int v : ends) {
      if (adj[static_cast<std::size_t>(v)][0] == wrap_label(v + 1, n)) start = v;
    }
  }
  std::vector<Chord> out;
  int prev = 0;
  int cur = start;
  while (true) {
    int next = 0;
    for (int y : adj[static_cast<std::size_t>(cur)]) {
      if (y != prev) next = y;
    }
    if (next == 0) break;
    out.emplace_back(cur, next);
    prev = cur;
    cur = next;
  }
  return out;
}

bool is_convex_caterpillar(const GeometricTree& tree) {
  if (!is_caterpillar(tree)) return false;
  const auto path = spine(tree);
  if (path.empty()) return true;
  std::vector<int> labels;
  for (const auto& e : path) {
    if (!e.is_cyclically_consecutive(tree.n())) return false;
    labels.push_back(e.a());
    labels.push_back(e.b());
  }
  return as_cyclic_interval(labels, tree.n()).has_value();
}

EdgeKind classify_edge(const GeometricTree& tree, const Chord& e) {
  if (!tree.index_of(e)) throw InvalidArgument(e.to_string() + " is not an edge of the tree");
  const bool branch = tree.is_leaf(e.a()) || tree.is_leaf(e.b());
  const bool link = e.is_cyclically_consecutive(tree.n());
  if (branch && link) return EdgeKind::kBoth;
  if (branch) return EdgeKind::kBranch;
  if (link) return EdgeKind::kLink;
  return EdgeKind::kNeither;
}

std::string to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kBranch:
      return "branch";
    case EdgeKind::kLink:
      return "link";
    case EdgeKind::kBoth:
      return "both";
    case EdgeKind::kNeither:
      break;
  }
  return "neither";
}

}  // namespace ncpos
