#pragma once

#include "critgroup/digraph.hpp"
#include "critgroup/error.hpp"
#include "critgroup/integer.hpp"
#include "critgroup/matrix.hpp"
#include "critgroup/smith.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace critgroup {

/// Invariant-factor presentation of a finitely generated abelian group
/// Z/g1 ⊕ ... ⊕ Z/gn, split into its torsion chain and free rank.
struct GroupPresentation {
  IntVector torsion;  // entries >= 2, each dividing the next
  std::size_t rank = 0;
  IntVector full_diag;

  static GroupPresentation from_diag(IntVector diag) {
    GroupPresentation g;
    for (const auto& d : diag) {
      if (d == 0)
        ++g.rank;
      else if (d != 1)
        g.torsion.push_back(d);
    }
    g.full_diag = std::move(diag);
    return g;
  }

  Integer torsion_order() const {
    Integer order = 1;
    for (const auto& t : torsion) order *= t;
    return order;
  }

  bool torsion_cyclic() const { return torsion.size() <= 1; }

  /// "Z/2 + Z/6 + Z^2"; the trivial group prints as "0".
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : torsion) {
      os << (first ? "" : " + ") << "Z/" << t;
      first = false;
    }
    if (rank > 0) {
      os << (first ? "" : " + ") << 'Z';
      if (rank > 1) os << '^' << rank;
      first = false;
    }
    return first ? "0" : os.str();
  }

  /// Same abstract group; unlike ==, ignores how many unit factors the
  /// presenting matrix had.
  bool isomorphic(const GroupPresentation& o) const { return torsion == o.torsion && rank == o.rank; }

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
  friend std::ostream& operator<<(std::ostream& os, const GroupPresentation& g) { return os << g.str(); }
};

/// Element of the torsion subgroup in Smith coordinates: one residue per
/// torsion factor.
struct GroupElement {
  IntVector coords;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Smith coordinates for the cokernel Z^n / relations·Z^n. With
/// L·relations·N = D, the class of x has coordinates L·x reduced modulo D.
class SmithCoordinates {
 public:
  explicit SmithCoordinates(const IntMatrix& relations) : snf_(snf(relations)), n_(relations.rows()) {
    if (!relations.square()) throw DimensionMismatch("SmithCoordinates expects a square relation matrix");
    group_ = GroupPresentation::from_diag(snf_.diag);
    for (std::size_t i = 0; i < snf_.diag.size(); ++i)
      if (snf_.diag[i] >= 2) torsion_pos_.push_back(i);
  }

  const GroupPresentation& group() const noexcept { return group_; }
  const SnfResult& smith() const noexcept { return snf_; }
  const std::vector<std::size_t>& torsion_positions() const noexcept { return torsion_pos_; }

  /// A vector of Z^n whose class is the given torsion element.
  IntVector representative(const GroupElement& e) const {
    IntVector y(n_);
    for (std::size_t i = 0; i < torsion_pos_.size(); ++i) y[torsion_pos_[i]] = e.coords[i];
    return snf_.l_inv * y;
  }

  /// Coordinates of the class of x, or nullopt when that class has infinite order.
  std::optional<GroupElement> torsion_coordinates(std::span<const Integer> x) const {
    const IntVector y = snf_.l * x;
    for (std::size_t i = 0; i < n_; ++i)
      if (snf_.diag[i] == 0 && y[i] != 0) return std::nullopt;
    GroupElement e;
    for (auto p : torsion_pos_) e.coords.push_back(mod_floor(y[p], snf_.diag[p]));
    return e;
  }

  bool is_zero_class(std::span<const Integer> x) const { return lattice_member(snf_, x); }

  /// All torsion elements in mixed-radix order (last coordinate fastest).
  std::vector<GroupElement> enumerate_torsion(std::size_t cap) const {
    if (group_.torsion_order() > cap) throw CapExceeded("torsion order", cap);
    std::vector<GroupElement> out;
    GroupElement cur{IntVector(torsion_pos_.size(), 0)};
    for (;;) {
      out.push_back(cur);
      std::size_t i = cur.coords.size();
      while (i > 0) {
        --i;
        if (++cur.coords[i] < group_.torsion[i]) break;
        cur.coords[i] = 0;
        if (i == 0) return out;
      }
      if (cur.coords.empty()) return out;
    }
  }

 private:
  SnfResult snf_;
  std::size_t n_;
  GroupPresentation group_;
  std::vector<std::size_t> torsion_pos_;
};

/// 𝒦(G) = Z^V / Qᵀ Z^V.
inline GroupPresentation critical_group(const Digraph& g) {
  return GroupPresentation::from_diag(snf(laplacian(g).transpose()).diag);
}

/// 𝒦*(G) = Z^V / Q Z^V.
inline GroupPresentation dual_critical_group(const Digraph& g) {
  return GroupPresentation::from_diag(snf(laplacian(g)).diag);
}

/// μ₀(G): the number of terminal strong components.
inline std::size_t rank_mu0(const Digraph& g) { return components(g).terminal_count(); }

struct ActivityVector {
  IntVector h;

  const Integer& operator[](Vertex v) const { return h[v]; }
  std::size_t size() const noexcept { return h.size(); }
  friend bool operator==(const ActivityVector&, const ActivityVector&) = default;
};

/// The positive primitive generator of ker(Qᵀ) of a strongly connected graph.
inline ActivityVector vertex_activities(const Digraph& g) {
  if (g.size() == 0 || !is_strongly_connected(g)) throw NotStronglyConnected("vertex_activities: graph is not strongly connected");
  if (g.size() == 1) return {{Integer(1)}};
  auto kernel = rational_nullspace(laplacian(g).transpose());
  if (kernel.size() != 1) throw std::logic_error("kernel of Q^T of a strongly connected graph is not one-dimensional");
  ActivityVector a{std::move(kernel.front())};
  for (const auto& x : a.h)
    if (x <= 0) throw std::logic_error("activity vector has a nonpositive entry");
  return a;
}

/// Vertices of activity 1.
inline std::vector<Vertex> simple_vertices(const Digraph& g) {
  const auto a = vertex_activities(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.size(); ++v)
    if (a[v] == 1) out.push_back(v);
  return out;
}

struct InvariantCounts {
  std::size_t mu1 = 0;  // invariant factors equal to 1
  std::size_t nu = 0;   // invariant factors >= 2
  std::size_t mu0 = 0;  // zeros
  friend bool operator==(const InvariantCounts&, const InvariantCounts&) = default;
};

inline InvariantCounts nu_and_mu(const Digraph& g) {
  InvariantCounts c;
  for (const auto& d : critical_group(g).full_diag) {
    if (d == 0)
      ++c.mu0;
    else if (d == 1)
      ++c.mu1;
    else
      ++c.nu;
  }
  return c;
}

using ReductionSequence = std::vector<std::pair<Vertex, Vertex>>;

struct SigmaBound {
  std::size_t length = 0;
  /// True when the search finished, so `length` is σ(G) itself; otherwise
  /// `length` is only a lower bound.
  bool exhaustive = true;
  ReductionSequence witness;
};

/// Checks the four defining conditions of a reduction sequence against Q. For
/// j >= 2 at least one of the two all-zero conditions must hold for pair j.
inline bool is_reduction_sequence(const IntMatrix& q, const ReductionSequence& seq) {
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const auto [vj, wj] = seq[j];
    if (abs_value(q(vj, wj)) != 1) return false;
    bool col_clear = true;
    bool row_clear = true;
    for (std::size_t i = 0; i < j; ++i) {
      if (seq[i].first == vj || seq[i].second == wj) return false;
      if (q(seq[i].first, wj) != 0) col_clear = false;
      if (q(vj, seq[i].second) != 0) row_clear = false;
    }
    if (!col_clear && !row_clear) return false;
  }
  return true;
}

/// σ(G), the maximum length of a reduction sequence, by depth-first search over
/// sequences. The first descent is greedy; the search stops after
/// `exhaustive_cap` nodes and then reports the best length found.
inline SigmaBound sigma_bound(const Digraph& g, std::size_t exhaustive_cap = 1'000'000) {
  if (g.size() == 0 || !components(g).weakly_connected())
    throw PreconditionError("sigma_bound: graph is not weakly connected");
  const IntMatrix q = laplacian(g);
  const std::size_t n = g.size();

  SigmaBound best;
  best.exhaustive = true;
  ReductionSequence seq;
  std::vector<bool> used_v(n, false), used_w(n, false);
  std::size_t nodes = 0;

  auto remaining_bound = [&]() {
    std::size_t rows = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (used_v[v]) continue;
      for (Vertex w = 0; w < n; ++w)
        if (!used_w[w] && abs_value(q(v, w)) == 1) {
          ++rows;
          break;
        }
    }
    return rows;
  };

  std::function<bool()> search = [&]() {
    if (++nodes > exhaustive_cap) return false;
    if (seq.size() > best.length) {
      best.length = seq.size();
      best.witness = seq;
    }
    if (seq.size() + remaining_bound() <= best.length) return true;
    for (Vertex v = 0; v < n; ++v) {
      if (used_v[v]) continue;
      for (Vertex w = 0; w < n; ++w) {
        if (used_w[w] || abs_value(q(v, w)) != 1) continue;
        bool col_clear = true;
        bool row_clear = true;
        for (const auto& [pv, pw] : seq) {
          if (q(pv, w) != 0) col_clear = false;
          if (q(v, pw) != 0) row_clear = false;
        }
        if (!col_clear && !row_clear) continue;
        seq.emplace_back(v, w);
        used_v[v] = used_w[w] = true;
        const bool finished = search();
        seq.pop_back();
        used_v[v] = used_w[w] = false;
        if (!finished) return false;
      }
    }
    return true;
  };
  best.exhaustive = search();
  return best;
}

inline std::vector<GroupElement> enumerate_torsion(const Digraph& g, std::size_t cap = 1'000'000) {
  return SmithCoordinates(laplacian(g).transpose()).enumerate_torsion(cap);
}

/// Φ with Φ[f(w)][w] = 1.
inline IntMatrix permutation_matrix(const Permutation& f) {
  IntMatrix phi(f.size(), f.size());
  for (Vertex w = 0; w < f.size(); ++w) phi(f[w], w) = 1;
  return phi;
}

struct CharacterCaps {
  std::size_t trees = 1'000'000;
  std::size_t elements = 1'000'000;
};

struct CharacterValues {
  std::size_t chi_t = 0;  // spanning trees fixed by f
  std::size_t chi_k = 0;  // elements of K(G) fixed by f_K
  friend bool operator==(const CharacterValues&, const CharacterValues&) = default;
};

/// Fixed-point counts of an automorphism on spanning trees and on K(G).
/// f_K acts in Smith coordinates through L·Φ·L⁻¹ reduced modulo the torsion
/// factors.
inline CharacterValues character_fixed_points(const Digraph& g, const Permutation& f, CharacterCaps caps = {}) {
  require_connected_undirected(g, "character_fixed_points");
  if (!is_automorphism(g, f)) throw PreconditionError("character_fixed_points: map is not an automorphism");

  CharacterValues out;

  const auto slots = edge_slots(g);
  using PairSet = std::vector<std::pair<Vertex, Vertex>>;
  auto image_pairs = [&](const SpanningTree& t, bool apply) {
    PairSet s;
    for (auto i : t) {
      Vertex a = slots[i].u, b = slots[i].v;
      if (apply) {
        a = f[a];
        b = f[b];
      }
      s.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  for (const auto& t : spanning_trees(g, caps.trees))
    if (image_pairs(t, false) == image_pairs(t, true)) ++out.chi_t;

  const SmithCoordinates frame(laplacian(g).transpose());
  const IntMatrix action = frame.smith().l * permutation_matrix(f) * frame.smith().l_inv;
  const auto& pos = frame.torsion_positions();
  const auto& torsion = frame.group().torsion;
  for (const auto& e : frame.enumerate_torsion(caps.elements)) {
    IntVector y(g.size());
    for (std::size_t i = 0; i < pos.size(); ++i) y[pos[i]] = e.coords[i];
    const IntVector image = action * y;
    bool fixed = true;
    for (std::size_t i = 0; i < pos.size() && fixed; ++i)
      fixed = mod_floor(image[pos[i]] - e.coords[i], torsion[i]) == 0;
    if (fixed) ++out.chi_k;
  }
  return out;
}

}  // namespace critgroup
