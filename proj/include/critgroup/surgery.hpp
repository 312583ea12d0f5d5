#pragma once

#include "critgroup/critical.hpp"
#include "critgroup/digraph.hpp"
#include "critgroup/error.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace critgroup {

/// Two vertex-disjoint graphs and the (vertex of g, vertex of h) pairs to glue.
struct SurgerySpec {
  Digraph g;
  Digraph h;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

struct SurgeryResult {
  Digraph graph;
  /// relabel[u] is the result vertex of union vertex u, where g's vertices come
  /// first and h's are shifted by g.size().
  std::vector<Vertex> relabel;
};

namespace detail {

inline void validate_spec(const SurgerySpec& spec, std::size_t expected_pairs) {
  if (spec.pairs.size() != expected_pairs)
    throw PreconditionError("surgery expects " + std::to_string(expected_pairs) + " identification pair(s)");
  for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
    const auto [v, w] = spec.pairs[i];
    if (v >= spec.g.size() || w >= spec.h.size()) throw PreconditionError("surgery pair names a vertex out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (spec.pairs[j].first == v || spec.pairs[j].second == w)
        throw PreconditionError("surgery pairs must use distinct vertices on each side");
  }
}

// (G ∪ H) with each (v, w) pair merged into a single vertex. A merged vertex
// takes the smaller union index, and indices are then compacted in order.
inline SurgeryResult glue(const Digraph& g, const Digraph& h, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  const Digraph both = disjoint_union(g, h);
  const std::size_t total = both.size();
  std::vector<Vertex> rep(total);
  for (Vertex u = 0; u < total; ++u) rep[u] = u;
  for (const auto& [v, w] : pairs) {
    const Vertex a = v, b = g.size() + w;
    rep[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Vertex> relabel(total);
  std::vector<Vertex> compact(total, total);
  std::size_t next = 0;
  for (Vertex u = 0; u < total; ++u)
    if (rep[u] == u) compact[u] = next++;
  for (Vertex u = 0; u < total; ++u) relabel[u] = compact[rep[u]];

  std::vector<std::int64_t> mult(next * next, 0);
  for (Vertex a = 0; a < total; ++a)
    for (Vertex b = 0; b < total; ++b) {
      const auto k = both.arcs(a, b);
      if (k == 0) continue;
      if (relabel[a] == relabel[b]) throw std::logic_error("surgery produced a loop");
      mult[relabel[a] * next + relabel[b]] += k;
    }
  return {Digraph(next, std::move(mult), g.undirected_flag() && h.undirected_flag()), std::move(relabel)};
}

inline void require_simple(const Digraph& h, Vertex w, const char* op) {
  if (vertex_activities(h)[w] != 1)
    throw HypothesisViolation(std::string(op) + ": vertex " + std::to_string(w) + " is not simple in H (activity " +
                              vertex_activities(h)[w].str() + ")");
}

inline void require_strong(const Digraph& g, const char* op, const char* which) {
  if (!is_strongly_connected(g))
    throw HypothesisViolation(std::string(op) + ": " + which + " is not strongly connected");
}

}  // namespace detail

/// (G ∪ H)/vw.
inline SurgeryResult identify(const SurgerySpec& spec) {
  detail::validate_spec(spec, 1);
  return detail::glue(spec.g, spec.h, spec.pairs);
}

struct TwistPair {
  SurgeryResult bullet;  // v1~w1, v2~w2
  SurgeryResult circle;  // v1~w2, v2~w1
};

/// G∙H and G∘H, related by twisting the two-vertex cut.
inline TwistPair twist_pair(const SurgerySpec& spec) {
  detail::validate_spec(spec, 2);
  const auto [v1, w1] = spec.pairs[0];
  const auto [v2, w2] = spec.pairs[1];
  return {detail::glue(spec.g, spec.h, {{v1, w1}, {v2, w2}}), detail::glue(spec.g, spec.h, {{v1, w2}, {v2, w1}})};
}

/// 𝒦(G ∪ H) ≅ 𝒦((G ∪ H)/vw) ⊕ Z when w is simple in H, checked by comparing
/// invariant factors.
inline bool verify_identification_theorem(const Digraph& g, const Digraph& h, Vertex v, Vertex w) {
  constexpr const char* op = "verify_identification_theorem";
  detail::require_strong(g, op, "G");
  detail::require_strong(h, op, "H");
  if (v >= g.size() || w >= h.size()) throw PreconditionError("identification vertex out of range");
  detail::require_simple(h, w, op);

  const auto separate = critical_group(disjoint_union(g, h));
  const auto merged = critical_group(identify({g, h, {{v, w}}}).graph);
  IntVector expected = merged.full_diag;
  expected.push_back(0);
  return separate.full_diag == expected && separate.torsion == merged.torsion;
}

/// 𝒦(G∙H) ≅ 𝒦(G∘H). Throws HypothesisViolation when G or H is not strongly
/// connected or w1, w2 are not both simple in H, unless `bypass_hypothesis`.
inline bool verify_twist_theorem(const SurgerySpec& spec, bool bypass_hypothesis = false) {
  constexpr const char* op = "verify_twist_theorem";
  const auto twisted = twist_pair(spec);
  if (!bypass_hypothesis) {
    detail::require_strong(spec.g, op, "G");
    detail::require_strong(spec.h, op, "H");
    detail::require_simple(spec.h, spec.pairs[0].second, op);
    detail::require_simple(spec.h, spec.pairs[1].second, op);
  }
  return critical_group(twisted.bullet.graph).full_diag == critical_group(twisted.circle.graph).full_diag;
}

}  // namespace critgroup
