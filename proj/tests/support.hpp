#pragma once

#include "critgroup/digraph.hpp"
#include "critgroup/integer.hpp"
#include "critgroup/matrix.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace critgroup;

inline IntVector ints(std::initializer_list<long long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

/// Loopless digraph with independent arc multiplicities in 0..max_mult.
inline Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p, int max_mult = 1) {
  std::bernoulli_distribution arc(p);
  std::uniform_int_distribution<int> mult(1, max_mult);
  std::vector<std::int64_t> m(n * n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n; ++w)
      if (v != w && arc(rng)) m[v * n + w] = mult(rng);
  return Digraph(n, std::move(m));
}

/// Random strongly connected digraph: a random Hamiltonian cycle plus extra arcs.
inline Digraph random_strong_digraph(std::mt19937_64& rng, std::size_t n, double p, int max_mult = 2) {
  Digraph base = random_digraph(rng, n, p, max_mult);
  std::vector<std::int64_t> m = base.multiplicities();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  if (n > 1)
    for (std::size_t i = 0; i < n; ++i) {
      auto& slot = m[order[i] * n + order[(i + 1) % n]];
      if (slot == 0) slot = 1;
    }
  return Digraph(n, std::move(m));
}

/// Connected undirected multigraph with n vertices and exactly `edges` edges
/// (edges >= n - 1): a random spanning tree plus random extra edges.
inline Digraph random_connected_graph(std::mt19937_64& rng, std::size_t n, std::size_t edges) {
  std::vector<std::int64_t> m(n * n, 0);
  auto add = [&](Vertex a, Vertex b) {
    ++m[a * n + b];
    ++m[b * n + a];
  };
  for (Vertex v = 1; v < n; ++v) add(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (std::size_t e = n - 1; e < edges && n > 1; ++e) {
    Vertex a = pick(rng), b = pick(rng);
    while (a == b) b = pick(rng);
    add(a, b);
  }
  return Digraph(n, std::move(m), true);
}

/// Random balanced digraph: a union of random directed cycles, so in-degree
/// equals out-degree everywhere; strongly connected by the spanning cycle.
inline Digraph random_balanced_digraph(std::mt19937_64& rng, std::size_t n, std::size_t extra_cycles) {
  std::vector<std::int64_t> m(n * n, 0);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  auto add_cycle = [&](std::size_t len) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < len; ++i) ++m[order[i] * n + order[(i + 1) % len]];
  };
  add_cycle(n);
  std::uniform_int_distribution<std::size_t> len(2, n);
  for (std::size_t k = 0; k < extra_cycles && n >= 2; ++k) add_cycle(len(rng));
  return Digraph(n, std::move(m));
}

}  // namespace testing_support
