#pragma once

#include "critgroup/error.hpp"
#include "critgroup/integer.hpp"
#include "critgroup/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace critgroup {

using Vertex = std::size_t;
using Arc = std::pair<Vertex, Vertex>;
using Permutation = std::vector<Vertex>;

/// Finite loopless directed multigraph on vertices 0..n-1, stored as its dense
/// arc-multiplicity matrix. An undirected edge is a pair of opposite arcs.
class Digraph {
 public:
  Digraph() = default;

  /// Edgeless graph on n vertices.
  explicit Digraph(std::size_t n) : n_(n), mult_(n * n, 0) {}

  /// From a multiplicity matrix; entries must be nonnegative, diagonal zero.
  Digraph(std::size_t n, std::vector<std::int64_t> mult, bool undirected = false)
      : n_(n), mult_(std::move(mult)), undirected_(undirected) {
    if (mult_.size() != n * n) throw DimensionMismatch("multiplicity matrix must be n*n");
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w) {
        if (arcs(v, w) < 0) throw PreconditionError("negative arc multiplicity");
        if (v == w && arcs(v, w) != 0) throw PreconditionError("loop at vertex " + std::to_string(v));
      }
    if (undirected_ && !is_symmetric()) throw PreconditionError("undirected graph with asymmetric multiplicities");
  }

  static Digraph from_arcs(std::size_t n, const std::vector<Arc>& arcs, bool undirected) {
    std::vector<std::int64_t> mult(n * n, 0);
    for (const auto& [tail, head] : arcs) {
      if (tail >= n || head >= n)
        throw PreconditionError("arc (" + std::to_string(tail) + "," + std::to_string(head) +
                                ") has a vertex out of range");
      if (tail == head) throw PreconditionError("loop at vertex " + std::to_string(tail));
      ++mult[tail * n + head];
      if (undirected) ++mult[head * n + tail];
    }
    return Digraph(n, std::move(mult), undirected);
  }

  std::size_t size() const noexcept { return n_; }

  /// Number of arcs v -> w.
  std::int64_t arcs(Vertex v, Vertex w) const { return mult_[v * n_ + w]; }

  bool undirected_flag() const noexcept { return undirected_; }

  std::int64_t outdegree(Vertex v) const {
    std::int64_t s = 0;
    for (Vertex w = 0; w < n_; ++w) s += arcs(v, w);
    return s;
  }

  std::int64_t indegree(Vertex v) const {
    std::int64_t s = 0;
    for (Vertex u = 0; u < n_; ++u) s += arcs(u, v);
    return s;
  }

  std::int64_t arc_count() const { return std::accumulate(mult_.begin(), mult_.end(), std::int64_t{0}); }

  bool is_symmetric() const {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w = v + 1; w < n_; ++w)
        if (arcs(v, w) != arcs(w, v)) return false;
    return true;
  }

  bool is_balanced() const {
    for (Vertex v = 0; v < n_; ++v)
      if (indegree(v) != outdegree(v)) return false;
    return true;
  }

  const std::vector<std::int64_t>& multiplicities() const noexcept { return mult_; }

  /// Image under a vertex relabeling: arc v->w becomes perm[v]->perm[w].
  Digraph relabeled(const Permutation& perm) const {
    std::vector<std::int64_t> mult(n_ * n_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w = 0; w < n_; ++w) mult[perm[v] * n_ + perm[w]] = arcs(v, w);
    return Digraph(n_, std::move(mult), undirected_);
  }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.mult_ == b.mult_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> mult_;
  bool undirected_ = false;
};

/// Vertex-disjoint union; h's vertices are shifted by g.size().
inline Digraph disjoint_union(const Digraph& g, const Digraph& h) {
  const std::size_t n = g.size() + h.size();
  std::vector<std::int64_t> mult(n * n, 0);
  for (Vertex v = 0; v < g.size(); ++v)
    for (Vertex w = 0; w < g.size(); ++w) mult[v * n + w] = g.arcs(v, w);
  const std::size_t off = g.size();
  for (Vertex v = 0; v < h.size(); ++v)
    for (Vertex w = 0; w < h.size(); ++w) mult[(off + v) * n + off + w] = h.arcs(v, w);
  return Digraph(n, std::move(mult), g.undirected_flag() && h.undirected_flag());
}

/// Q = Δ - A.
inline IntMatrix laplacian(const Digraph& g) {
  const std::size_t n = g.size();
  IntMatrix q(n, n);
  for (Vertex v = 0; v < n; ++v) {
    q(v, v) = g.outdegree(v);
    for (Vertex w = 0; w < n; ++w)
      if (w != v) q(v, w) = -g.arcs(v, w);
  }
  return q;
}

struct ComponentDecomposition {
  /// Strong components in a topological order of the condensation: an arc from
  /// component i to component j implies i <= j. Each vertex list is sorted.
  std::vector<std::vector<Vertex>> strong_components;
  std::vector<bool> terminal;
  /// Weak components ordered by least vertex.
  std::vector<std::vector<Vertex>> weak_components;

  std::size_t terminal_count() const {
    return static_cast<std::size_t>(std::count(terminal.begin(), terminal.end(), true));
  }
  bool strongly_connected() const { return strong_components.size() == 1; }
  bool weakly_connected() const { return weak_components.size() == 1; }
};

/// Tarjan's algorithm; components come out sinks-first and are reversed.
inline ComponentDecomposition components(const Digraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> sccs;
  std::size_t counter = 0;

  std::function<void(Vertex)> connect = [&](Vertex v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Vertex w = 0; w < n; ++w) {
      if (g.arcs(v, w) == 0) continue;
      if (index[w] == unvisited) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<Vertex> comp;
      Vertex w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      sccs.push_back(std::move(comp));
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (index[v] == unvisited) connect(v);
  std::reverse(sccs.begin(), sccs.end());

  ComponentDecomposition out;
  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < sccs.size(); ++c)
    for (Vertex v : sccs[c]) comp_of[v] = c;
  out.terminal.assign(sccs.size(), true);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n; ++w)
      if (g.arcs(v, w) > 0 && comp_of[v] != comp_of[w]) out.terminal[comp_of[v]] = false;
  out.strong_components = std::move(sccs);

  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  std::function<Vertex(Vertex)> find = [&](Vertex v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n; ++w)
      if (g.arcs(v, w) > 0) parent[find(v)] = find(w);
  std::vector<std::size_t> slot(n, unvisited);
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = find(v);
    if (slot[r] == unvisited) {
      slot[r] = out.weak_components.size();
      out.weak_components.emplace_back();
    }
    out.weak_components[slot[r]].push_back(v);
  }
  return out;
}

inline bool is_strongly_connected(const Digraph& g) { return components(g).strongly_connected(); }

inline void require_connected_undirected(const Digraph& g, const char* op) {
  if (!g.is_symmetric()) throw PreconditionError(std::string(op) + ": graph is not undirected");
  if (g.size() == 0 || !components(g).weakly_connected())
    throw PreconditionError(std::string(op) + ": graph is not connected");
}

/// κ(G) as the (0,0) cofactor of the Laplacian.
inline Integer spanning_tree_count(const Digraph& g) {
  require_connected_undirected(g, "spanning_tree_count");
  if (g.size() == 1) return 1;
  return determinant(laplacian(g).minor(0, 0));
}

/// One slot per undirected edge; parallel copies are distinguished by `copy`.
struct EdgeSlot {
  Vertex u;
  Vertex v;
  std::size_t copy;
  friend bool operator==(const EdgeSlot&, const EdgeSlot&) = default;
};

/// Edge slots of a symmetric digraph, ordered by (u, v, copy) with u < v.
inline std::vector<EdgeSlot> edge_slots(const Digraph& g) {
  if (!g.is_symmetric()) throw PreconditionError("edge_slots: graph is not undirected");
  std::vector<EdgeSlot> slots;
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v = u + 1; v < g.size(); ++v)
      for (std::int64_t k = 0; k < g.arcs(u, v); ++k) slots.push_back({u, v, static_cast<std::size_t>(k)});
  return slots;
}

/// A spanning tree as sorted indices into edge_slots(g).
using SpanningTree = std::vector<std::size_t>;

/// Every spanning tree, by include/exclude backtracking over edge slots with a
/// union-find that is rebuilt per branch (n is tiny).
inline std::vector<SpanningTree> spanning_trees(const Digraph& g, std::size_t cap = 1'000'000) {
  require_connected_undirected(g, "spanning_trees");
  if (spanning_tree_count(g) > cap) throw CapExceeded("spanning tree count", cap);

  const auto slots = edge_slots(g);
  const std::size_t n = g.size();
  std::vector<SpanningTree> trees;
  SpanningTree chosen;

  auto root = [](std::vector<Vertex>& parent, Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  // Can the chosen edges plus slots[from..] still connect every vertex?
  auto connectable = [&](std::size_t from) {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    std::size_t parts = n;
    auto join = [&](Vertex a, Vertex b) {
      a = root(parent, a);
      b = root(parent, b);
      if (a != b) {
        parent[a] = b;
        --parts;
      }
    };
    for (auto i : chosen) join(slots[i].u, slots[i].v);
    for (std::size_t i = from; i < slots.size(); ++i) join(slots[i].u, slots[i].v);
    return parts == 1;
  };
  auto closes_cycle = [&](std::size_t idx) {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    for (auto i : chosen) parent[root(parent, slots[i].u)] = root(parent, slots[i].v);
    return root(parent, slots[idx].u) == root(parent, slots[idx].v);
  };

  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (chosen.size() + 1 == n) {
      trees.push_back(chosen);
      return;
    }
    if (i == slots.size()) return;
    if (!closes_cycle(i)) {
      chosen.push_back(i);
      extend(i + 1);
      chosen.pop_back();
    }
    if (connectable(i + 1)) extend(i + 1);
  };
  extend(0);
  return trees;
}

/// All automorphisms, by backtracking with (outdegree, indegree) pruning.
/// Results are in lexicographic order of the image sequence.
inline std::vector<Permutation> automorphisms(const Digraph& g, std::size_t cap = 12) {
  const std::size_t n = g.size();
  if (n > cap) throw CapExceeded("automorphism search vertex count", cap);
  std::vector<Permutation> out;
  Permutation image(n);
  std::vector<bool> used(n, false);

  std::function<void(Vertex)> assign = [&](Vertex v) {
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (Vertex cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      if (g.outdegree(cand) != g.outdegree(v) || g.indegree(cand) != g.indegree(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        ok = g.arcs(image[u], cand) == g.arcs(u, v) && g.arcs(cand, image[u]) == g.arcs(v, u);
      if (!ok) continue;
      image[v] = cand;
      used[cand] = true;
      assign(v + 1);
      used[cand] = false;
    }
  };
  assign(0);
  return out;
}

inline bool is_automorphism(const Digraph& g, const Permutation& f) {
  const std::size_t n = g.size();
  if (f.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : f) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n; ++w)
      if (g.arcs(f[v], f[w]) != g.arcs(v, w)) return false;
  return true;
}

// Common families used by tests, the CLI and the experiment harness.

inline Digraph cycle_graph(std::size_t n) {
  std::vector<Arc> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Digraph::from_arcs(n, edges, true);
}

inline Digraph directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return Digraph::from_arcs(n, arcs, false);
}

inline Digraph complete_graph(std::size_t n) {
  std::vector<Arc> edges;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = v + 1; w < n; ++w) edges.emplace_back(v, w);
  return Digraph::from_arcs(n, edges, true);
}

inline Digraph path_graph(std::size_t n) {
  std::vector<Arc> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Digraph::from_arcs(n, edges, true);
}

}  // namespace critgroup
