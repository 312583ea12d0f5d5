#pragma once

// Oracles that avoid the Smith normal form entirely: classes of K(G) for a
// connected undirected graph are handled through the reduced Laplacian, which
// is invertible over Q.

#include "critgroup/digraph.hpp"
#include "critgroup/integer.hpp"
#include "critgroup/matrix.hpp"

#include <optional>
#include <vector>

namespace testing_support {

using namespace critgroup;

/// Solves a·x = b over Q by Gauss–Jordan; a must be invertible.
inline RatVector rational_solve(const IntMatrix& a, const IntVector& b) {
  const std::size_t n = a.rows();
  RatMatrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(a(i, j));
    m(i, n) = Rational(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m(p, c) == 0) ++p;
    m.swap_rows(p, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j <= n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m(i, n) / m(i, i);
  return x;
}

/// x ≡ y in Z^V / Q Z^V, for sum-zero vectors of a connected undirected graph.
/// Since Q·1 = 0 one may fix z_0 = 0 and solve the reduced system.
inline bool equivalent(const Digraph& g, const IntVector& x, const IntVector& y) {
  const std::size_t n = g.size();
  if (n == 1) return true;
  const IntMatrix reduced = laplacian(g).minor(0, 0);
  IntVector rhs(n - 1);
  for (std::size_t i = 1; i < n; ++i) rhs[i - 1] = x[i] - y[i];
  for (const auto& q : rational_solve(reduced, rhs))
    if (boost::multiprecision::denominator(q) != 1) return false;
  return true;
}

/// One representative per class of K(G), by closing {0} under adding
/// e_i - e_0 and deduplicating with `equivalent`.
inline std::vector<IntVector> torsion_classes(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<IntVector> reps{IntVector(n, 0)};
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (std::size_t i = 1; i < n; ++i) {
      IntVector next = reps[k];
      next[i] += 1;
      next[0] -= 1;
      bool seen = false;
      for (const auto& r : reps)
        if (equivalent(g, r, next)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(next);
    }
  return reps;
}

/// Number of classes of K(G) fixed by the vertex permutation f.
inline std::size_t fixed_classes(const Digraph& g, const std::vector<Vertex>& f) {
  std::size_t count = 0;
  for (const auto& x : torsion_classes(g)) {
    IntVector image(g.size());
    for (Vertex w = 0; w < g.size(); ++w) image[f[w]] = x[w];
    count += equivalent(g, x, image);
  }
  return count;
}

}  // namespace testing_support
