#include "critgroup/digraph.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace critgroup;

namespace {

// Transitive closure by Floyd–Warshall.
std::vector<std::vector<bool>> reachability(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (Vertex v = 0; v < n; ++v) {
    r[v][v] = true;
    for (Vertex w = 0; w < n; ++w)
      if (g.arcs(v, w) > 0) r[v][w] = true;
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

// Counts (n-1)-subsets of edge slots that form a forest.
std::size_t brute_force_tree_count(const Digraph& g) {
  const auto slots = edge_slots(g);
  const std::size_t n = g.size(), m = slots.size();
  if (n == 1) return 1;
  std::vector<bool> pick(m, false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(n - 1), pick.end(), true);
  std::size_t count = 0;
  do {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto root = [&](Vertex v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    bool forest = true;
    for (std::size_t i = 0; i < m && forest; ++i) {
      if (!pick[i]) continue;
      const Vertex a = root(slots[i].u), b = root(slots[i].v);
      if (a == b) forest = false;
      else parent[a] = b;
    }
    count += forest;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

}  // namespace

TEST(Digraph, RejectsLoopsAndNegativeEntries) {
  EXPECT_THROW(Digraph(2, {1, 0, 0, 0}), PreconditionError);
  EXPECT_THROW(Digraph(2, {0, -1, 0, 0}), PreconditionError);
  EXPECT_THROW(Digraph(2, {0, 1}), DimensionMismatch);
  EXPECT_THROW(Digraph(2, {0, 1, 0, 0}, true), PreconditionError);
  EXPECT_THROW(Digraph::from_arcs(2, {{0, 2}}, false), PreconditionError);
  EXPECT_THROW(Digraph::from_arcs(2, {{1, 1}}, false), PreconditionError);
}

TEST(Digraph, LaplacianRowsSumToZero) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto g = testing_support::random_digraph(rng, 1 + t % 7, 0.4, 3);
    const auto q = laplacian(g);
    for (std::size_t i = 0; i < q.rows(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < q.cols(); ++j) s += q(i, j);
      EXPECT_EQ(s, 0);
    }
  }
}

TEST(Digraph, FourVertexBankLaplacian) {
  const auto g = Digraph::from_arcs(4, {{0, 1}, {0, 2}, {1, 2}, {1, 2}, {2, 0}, {2, 3}, {3, 0}, {3, 1}}, false);
  const IntMatrix q{{2, -1, -1, 0}, {0, 2, -2, 0}, {-1, 0, 2, -1}, {-1, -1, 0, 2}};
  EXPECT_EQ(laplacian(g), q);
  EXPECT_TRUE(is_strongly_connected(g));
  EXPECT_FALSE(g.is_balanced());
}

TEST(Components, AgreeWithReachabilityOracle) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 8;
    const auto g = testing_support::random_digraph(rng, n, 0.25);
    const auto dec = components(g);
    const auto r = reachability(g);

    std::vector<std::size_t> comp_of(n);
    for (std::size_t c = 0; c < dec.strong_components.size(); ++c)
      for (Vertex v : dec.strong_components[c]) comp_of[v] = c;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w) {
        EXPECT_EQ(comp_of[v] == comp_of[w], r[v][w] && r[w][v]);
        if (g.arcs(v, w) > 0) {
          EXPECT_LE(comp_of[v], comp_of[w]);  // topological
        }
      }
    // Terminal: nothing outside the component is reachable from it.
    for (std::size_t c = 0; c < dec.strong_components.size(); ++c) {
      const Vertex v = dec.strong_components[c].front();
      bool closed = true;
      for (Vertex w = 0; w < n; ++w)
        if (r[v][w] && comp_of[w] != c) closed = false;
      EXPECT_EQ(dec.terminal[c], closed);
    }
  }
}

TEST(Components, EdgelessGraph) {
  const auto dec = components(Digraph(4));
  EXPECT_EQ(dec.strong_components.size(), 4u);
  EXPECT_EQ(dec.terminal_count(), 4u);
  EXPECT_EQ(dec.weak_components.size(), 4u);
}

TEST(SpanningTrees, CycleAndComplete) {
  EXPECT_EQ(spanning_tree_count(cycle_graph(12)), 12);
  EXPECT_EQ(spanning_tree_count(complete_graph(5)), 125);  // Cayley
  EXPECT_EQ(spanning_tree_count(path_graph(6)), 1);
  EXPECT_EQ(spanning_tree_count(Digraph(1)), 1);
  EXPECT_THROW(spanning_tree_count(Digraph(3)), PreconditionError);
}

TEST(SpanningTrees, EnumerationMatchesBruteForceAndDeterminant) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 5;
    const auto g = testing_support::random_connected_graph(rng, n, n - 1 + t % 5);
    const auto trees = spanning_trees(g);
    EXPECT_EQ(trees.size(), brute_force_tree_count(g));
    EXPECT_EQ(Integer(trees.size()), spanning_tree_count(g));
    std::set<SpanningTree> distinct(trees.begin(), trees.end());
    EXPECT_EQ(distinct.size(), trees.size());
  }
}

TEST(SpanningTrees, CapExceeded) {
  EXPECT_THROW(spanning_trees(complete_graph(6), 100), CapExceeded);
}

TEST(Automorphisms, MatchBruteForcePermutations) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 6;
    const auto g = testing_support::random_digraph(rng, n, 0.5, 2);
    std::vector<Permutation> expected;
    Permutation p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
      if (is_automorphism(g, p)) expected.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(automorphisms(g), expected);
  }
}

TEST(Automorphisms, CycleHasDihedralGroup) {
  EXPECT_EQ(automorphisms(cycle_graph(9)).size(), 18u);
  EXPECT_EQ(automorphisms(directed_cycle(9)).size(), 9u);
  EXPECT_THROW(automorphisms(cycle_graph(13)), CapExceeded);
}

TEST(Digraph, RelabelRoundTrip) {
  const auto g = directed_cycle(4);
  const Permutation f{1, 2, 3, 0};
  EXPECT_TRUE(is_automorphism(g, f));
  EXPECT_EQ(g.relabeled(f), g);
  EXPECT_FALSE(is_automorphism(g, {1, 0, 2, 3}));
}

TEST(Digraph, DisjointUnionShiftsSecond) {
  const auto u = disjoint_union(cycle_graph(3), cycle_graph(4));
  EXPECT_EQ(u.size(), 7u);
  EXPECT_EQ(u.arcs(3, 4), 1);
  EXPECT_EQ(u.arcs(2, 3), 0);
  EXPECT_EQ(components(u).weak_components.size(), 2u);
}
