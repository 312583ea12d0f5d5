#pragma once

#include "critgroup/critical.hpp"
#include "critgroup/digraph.hpp"
#include "critgroup/error.hpp"
#include "critgroup/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace critgroup {

/// Statistics over the connected samples of G(n, p).
struct ExperimentReport {
  std::size_t n = 0;
  double p = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t connected_count = 0;
  std::size_t cyclic_count = 0;  // K(G) cyclic (or trivial)
  std::size_t nu_total = 0;
  double mean_nu = 0;
  std::size_t squarefree_kappa_count = 0;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Uniform double in [0, 1) from the top 53 bits of one engine output, so the
/// sample stream depends only on mt19937_64 (fully specified by the standard).
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Erdős–Rényi G(n, p): each of the C(n,2) edges, in lexicographic order,
/// included independently with probability p.
inline Digraph random_simple_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Arc> edges;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = v + 1; w < n; ++w)
      if (unit_uniform(rng) < p) edges.emplace_back(v, w);
  return Digraph::from_arcs(n, edges, true);
}

/// Square-freeness by trial division up to the cube root of the unfactored
/// part; what remains then has at most two prime factors and is square-free
/// unless it is a perfect square.
inline bool is_squarefree(Integer m) {
  if (m <= 0) throw PreconditionError("is_squarefree expects a positive integer");
  for (std::uint64_t d = 2; Integer(d) * d * d <= m; ++d) {
    if (m % d != 0) continue;
    m /= d;
    if (m % d == 0) return false;
  }
  if (m == 1) return true;
  const Integer r = boost::multiprecision::sqrt(m);
  return r * r != m;
}

inline ExperimentReport run_experiment(std::size_t n, double p, std::size_t trials, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("experiment needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0, 1]");
  ExperimentReport rep;
  rep.n = n;
  rep.p = p;
  rep.trials = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Digraph g = random_simple_graph(n, p, rng);
    if (!components(g).weakly_connected()) continue;
    ++rep.connected_count;
    const auto k = critical_group(g);
    rep.nu_total += k.torsion.size();
    if (k.torsion_cyclic()) ++rep.cyclic_count;
    if (is_squarefree(spanning_tree_count(g))) ++rep.squarefree_kappa_count;
  }
  rep.mean_nu = rep.connected_count ? static_cast<double>(rep.nu_total) / static_cast<double>(rep.connected_count) : 0.0;
  return rep;
}

}  // namespace critgroup
