#pragma once

#include "critgroup/critical.hpp"
#include "critgroup/digraph.hpp"
#include "critgroup/error.hpp"
#include "critgroup/matrix.hpp"
#include "critgroup/smith.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace critgroup {

using Partition = std::vector<std::vector<Vertex>>;

/// Raised by check_equitable; names the first vertex whose arc count into (or
/// from) a block differs from the rest of its own block.
class NotEquitable : public PreconditionError {
 public:
  NotEquitable(Vertex vertex, std::size_t block, bool forward)
      : PreconditionError("partition is not equitable: vertex " + std::to_string(vertex) + " has a different " +
                          (forward ? "out-arc count into" : "in-arc count from") + " block " + std::to_string(block)),
        vertex_(vertex),
        block_(block),
        forward_(forward) {}

  Vertex vertex() const noexcept { return vertex_; }
  std::size_t block() const noexcept { return block_; }
  bool forward() const noexcept { return forward_; }

 private:
  Vertex vertex_;
  std::size_t block_;
  bool forward_;
};

struct EquitablePartition {
  Partition blocks;  // sorted blocks, ordered by least vertex
  IntMatrix f;       // f(i,j): out-arcs from any vertex of block i into block j
  IntMatrix r;       // r(i,j): in-arcs into any vertex of block j from block i
  IntMatrix b;       // diag(block sizes)

  std::size_t size() const noexcept { return blocks.size(); }

  /// The V×p block indicator matrix P.
  IntMatrix indicator(std::size_t n) const {
    IntMatrix p(n, blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (Vertex v : blocks[i]) p(v, i) = 1;
    return p;
  }
};

/// Sorts each block and orders blocks by least vertex; validates that the
/// blocks are nonempty, disjoint and cover 0..n-1.
inline Partition normalize_partition(Partition blocks, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (auto& blk : blocks) {
    if (blk.empty()) throw PreconditionError("partition has an empty block");
    std::sort(blk.begin(), blk.end());
    for (Vertex v : blk) {
      if (v >= n) throw PreconditionError("partition names vertex " + std::to_string(v) + " out of range");
      if (seen[v]) throw PreconditionError("vertex " + std::to_string(v) + " appears in two blocks");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) throw PreconditionError("partition does not cover every vertex");
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

inline EquitablePartition check_equitable(const Digraph& g, Partition blocks) {
  const std::size_t n = g.size();
  EquitablePartition ep;
  ep.blocks = normalize_partition(std::move(blocks), n);
  const std::size_t p = ep.blocks.size();
  std::vector<std::size_t> block_of(n);
  for (std::size_t i = 0; i < p; ++i)
    for (Vertex v : ep.blocks[i]) block_of[v] = i;

  auto out_count = [&](Vertex v, std::size_t j) {
    std::int64_t s = 0;
    for (Vertex w : ep.blocks[j]) s += g.arcs(v, w);
    return s;
  };
  auto in_count = [&](Vertex w, std::size_t i) {
    std::int64_t s = 0;
    for (Vertex v : ep.blocks[i]) s += g.arcs(v, w);
    return s;
  };

  ep.f = IntMatrix(p, p);
  ep.r = IntMatrix(p, p);
  ep.b = IntMatrix(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    ep.b(i, i) = ep.blocks[i].size();
    for (std::size_t j = 0; j < p; ++j) {
      ep.f(i, j) = out_count(ep.blocks[i].front(), j);
      ep.r(i, j) = in_count(ep.blocks[j].front(), i);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t j = 0; j < p; ++j) {
      if (out_count(v, j) != ep.f(block_of[v], j)) throw NotEquitable(v, j, true);
      if (in_count(v, j) != ep.r(j, block_of[v])) throw NotEquitable(v, j, false);
    }
  if (ep.b * ep.f != ep.r * ep.b) throw std::logic_error("equitable partition violates BF = RB");
  return ep;
}

/// G/π with adjacency F. Arcs inside a block become loops of G/π; they are
/// dropped because they cancel in the Laplacian D - F.
inline Digraph quotient_graph(const EquitablePartition& ep) {
  const std::size_t p = ep.size();
  std::vector<std::int64_t> mult(p * p, 0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (i != j) mult[i * p + j] = static_cast<std::int64_t>(ep.f(i, j));
  return Digraph(p, std::move(mult));
}

/// Coarsest equitable partition refining `seed`. Each round splits blocks by
/// (current block, out-counts into every block, in-counts from every block).
inline EquitablePartition coarsest_equitable(const Digraph& g, const Partition& seed) {
  const std::size_t n = g.size();
  const Partition start = normalize_partition(seed, n);
  std::vector<std::size_t> color(n);
  for (std::size_t i = 0; i < start.size(); ++i)
    for (Vertex v : start[i]) color[v] = i;
  std::size_t classes = start.size();

  for (;;) {
    using Signature = std::tuple<std::size_t, std::vector<std::int64_t>, std::vector<std::int64_t>>;
    std::map<Signature, std::size_t> ids;
    std::vector<Signature> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::int64_t> out(classes, 0), in(classes, 0);
      for (Vertex w = 0; w < n; ++w) {
        out[color[w]] += g.arcs(v, w);
        in[color[w]] += g.arcs(w, v);
      }
      sig[v] = {color[v], std::move(out), std::move(in)};
      ids.emplace(sig[v], 0);
    }
    if (ids.size() == classes) break;
    std::size_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) color[v] = ids.at(sig[v]);
    classes = ids.size();
  }

  Partition blocks(classes);
  for (Vertex v = 0; v < n; ++v) blocks[color[v]].push_back(v);
  return check_equitable(g, std::move(blocks));
}

inline Partition discrete_partition(std::size_t n) {
  Partition p(n);
  for (Vertex v = 0; v < n; ++v) p[v] = {v};
  return p;
}

inline Partition trivial_partition(std::size_t n) {
  Partition p(1);
  for (Vertex v = 0; v < n; ++v) p[0].push_back(v);
  return p;
}

/// Decides whether ρ: 𝒦*(G/π) → 𝒦*(G), x + Q̂Z^p ↦ Px + QZ^V, is injective.
/// Torsion: every nonzero torsion element of 𝒦*(G/π) is mapped and tested for
/// membership in QZ^V. Free part: ρ⊗Q is injective iff
/// rank[P | Q] - rank Q = p - rank Q̂.
inline bool verify_rho_injective(const Digraph& g, const EquitablePartition& ep, std::size_t cap = 1'000'000) {
  const IntMatrix q = laplacian(g);
  const IntMatrix q_hat = laplacian(quotient_graph(ep));
  const IntMatrix p = ep.indicator(g.size());

  const SmithCoordinates source(q_hat);
  const auto target = snf(q);
  for (const auto& e : source.enumerate_torsion(cap)) {
    if (std::all_of(e.coords.begin(), e.coords.end(), [](const Integer& c) { return c == 0; })) continue;
    if (lattice_member(target, p * source.representative(e))) return false;
  }
  return rank(hconcat(p, q)) - rank(q) == ep.size() - rank(q_hat);
}

/// Whether ρ(K*(G/π)) is a direct summand of K*(G). For finite abelian groups a
/// subgroup H ≤ T splits off iff T ≅ H ⊕ T/H, which is decided here by
/// comparing invariant factors. Requires ρ to be injective.
inline bool is_direct_summand(const Digraph& g, const EquitablePartition& ep, std::size_t cap = 1'000'000) {
  if (!verify_rho_injective(g, ep, cap)) throw PreconditionError("is_direct_summand: rho is not injective");
  const IntMatrix p = ep.indicator(g.size());
  const SmithCoordinates target(laplacian(g));
  const SmithCoordinates source(laplacian(quotient_graph(ep)));

  const auto& t_pos = target.torsion_positions();
  const auto& t_fac = target.group().torsion;
  const std::size_t k = t_pos.size();

  // Relations of T/H in the torsion coordinates of T: diag(t_fac) plus the
  // images of the generators of H.
  const auto& s_pos = source.torsion_positions();
  IntMatrix rel(k, k + s_pos.size());
  for (std::size_t i = 0; i < k; ++i) rel(i, i) = t_fac[i];
  for (std::size_t j = 0; j < s_pos.size(); ++j) {
    GroupElement gen{IntVector(s_pos.size(), 0)};
    gen.coords[j] = 1;
    const auto image = target.torsion_coordinates(p * source.representative(gen));
    if (!image) throw std::logic_error("image of a torsion element has infinite order");
    for (std::size_t i = 0; i < k; ++i) rel(i, k + j) = image->coords[i];
  }
  const auto quotient = GroupPresentation::from_diag(snf(rel).diag);

  IntVector combined = source.group().torsion;
  combined.insert(combined.end(), quotient.torsion.begin(), quotient.torsion.end());
  const auto split = GroupPresentation::from_diag(snf(IntMatrix::diagonal(combined)).diag);
  return split.torsion == t_fac;
}

}  // namespace critgroup
