#pragma once

#include "critgroup/critical.hpp"
#include "critgroup/digraph.hpp"
#include "critgroup/error.hpp"
#include "critgroup/smith.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace critgroup {

using Chips = std::int64_t;

/// Integer vector over V summing to zero; the bank holds minus the total of
/// every other vertex. Ordered lexicographically by the non-bank entries.
class Configuration {
 public:
  Configuration(Vertex bank, std::vector<Chips> values) : bank_(bank), values_(std::move(values)) {
    if (bank_ >= values_.size()) throw PreconditionError("bank vertex out of range");
    if (std::accumulate(values_.begin(), values_.end(), Chips{0}) != 0)
      throw PreconditionError("configuration entries must sum to zero");
  }

  /// Builds a configuration from the entries of every non-bank vertex, in
  /// vertex order.
  static Configuration from_nonbank(std::size_t n, Vertex bank, const std::vector<Chips>& nonbank) {
    if (bank >= n) throw PreconditionError("bank vertex out of range");
    if (nonbank.size() + 1 != n) throw PreconditionError("configuration needs one entry per non-bank vertex");
    std::vector<Chips> values(n, 0);
    Chips total = 0;
    for (Vertex v = 0, k = 0; v < n; ++v) {
      if (v == bank) continue;
      values[v] = nonbank[k++];
      total += values[v];
    }
    values[bank] = -total;
    return Configuration(bank, std::move(values));
  }

  static Configuration zero(std::size_t n, Vertex bank) { return Configuration(bank, std::vector<Chips>(n, 0)); }

  Vertex bank() const noexcept { return bank_; }
  std::size_t size() const noexcept { return values_.size(); }
  Chips operator[](Vertex v) const { return values_[v]; }
  const std::vector<Chips>& values() const noexcept { return values_; }

  std::vector<Chips> nonbank() const {
    std::vector<Chips> out;
    for (Vertex v = 0; v < values_.size(); ++v)
      if (v != bank_) out.push_back(values_[v]);
    return out;
  }

  bool nonnegative() const {
    for (Vertex v = 0; v < values_.size(); ++v)
      if (v != bank_ && values_[v] < 0) return false;
    return true;
  }

  /// Digits run together ("110") when every non-bank entry is a single digit,
  /// otherwise a bracketed list ("[3,-1,12]").
  std::string str() const {
    const auto nb = nonbank();
    const bool compact = std::all_of(nb.begin(), nb.end(), [](Chips c) { return c >= 0 && c <= 9; });
    std::ostringstream os;
    if (!compact) os << '[';
    for (std::size_t i = 0; i < nb.size(); ++i) os << (compact || i == 0 ? "" : ",") << nb[i];
    if (!compact) os << ']';
    return os.str();
  }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.bank_ == b.bank_ && a.values_ == b.values_;
  }
  friend bool operator<(const Configuration& a, const Configuration& b) { return a.nonbank() < b.nonbank(); }

 private:
  friend class GameState;
  Vertex bank_;
  std::vector<Chips> values_;
};

/// A loopless strongly connected graph with a chosen bank vertex.
class GameState {
 public:
  GameState(Digraph graph, Vertex bank) : graph_(std::move(graph)), bank_(bank) {
    if (bank_ >= graph_.size()) throw PreconditionError("bank vertex out of range");
    if (!is_strongly_connected(graph_)) throw NotStronglyConnected("dollar game needs a strongly connected graph");
    activities_ = vertex_activities(graph_);
    for (Vertex v = 0; v < graph_.size(); ++v) outdeg_.push_back(graph_.outdegree(v));
  }

  const Digraph& graph() const noexcept { return graph_; }
  Vertex bank() const noexcept { return bank_; }
  const ActivityVector& activities() const noexcept { return activities_; }
  Chips outdegree(Vertex v) const { return outdeg_[v]; }
  std::size_t size() const noexcept { return graph_.size(); }

  void check(const Configuration& c) const {
    if (c.size() != size() || c.bank() != bank_) throw PreconditionError("configuration does not match the game");
  }

  bool is_stable(const Configuration& c) const {
    check(c);
    for (Vertex v = 0; v < size(); ++v)
      if (v != bank_ && c[v] >= outdeg_[v]) return false;
    return true;
  }

  /// Non-bank vertices holding at least their outdegree.
  std::vector<Vertex> legal_nonbank(const Configuration& c) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < size(); ++v)
      if (v != bank_ && c[v] >= outdeg_[v]) out.push_back(v);
    return out;
  }

  /// In-place c - Qᵀ·(times · e_v).
  void fire_in_place(Configuration& c, Vertex v, Chips times = 1) const {
    c.values_[v] -= times * outdeg_[v];
    for (Vertex w = 0; w < size(); ++w)
      if (w != v) c.values_[w] += times * graph_.arcs(v, w);
  }

 private:
  Digraph graph_;
  Vertex bank_;
  ActivityVector activities_;
  std::vector<Chips> outdeg_;
};

/// Non-bank v is legal when it holds at least its outdegree; the bank is legal
/// exactly when c is stable.
inline bool is_legal(const GameState& gs, const Configuration& c, Vertex v) {
  gs.check(c);
  if (v == gs.bank()) return gs.is_stable(c);
  return c[v] >= gs.outdegree(v);
}

/// c | v = c - Qᵀ e_v. Legality is not checked.
inline Configuration fire(const GameState& gs, Configuration c, Vertex v) {
  gs.check(c);
  gs.fire_in_place(c, v);
  return c;
}

struct Stabilization {
  Configuration stable;
  std::vector<Chips> firing_counts;  // stable = c - Qᵀ·firing_counts, bank entry 0
};

/// Fires legal non-bank vertices until none is legal; `choose` picks the next
/// vertex from the nonempty list of legal ones.
template <typename Chooser>
Stabilization stabilize(const GameState& gs, Configuration c, Chooser&& choose) {
  gs.check(c);
  std::vector<Chips> counts(gs.size(), 0);
  for (;;) {
    const auto legal = gs.legal_nonbank(c);
    if (legal.empty()) break;
    const Vertex v = choose(legal);
    gs.fire_in_place(c, v);
    ++counts[v];
  }
  return {std::move(c), std::move(counts)};
}

/// Default policy: always fire the lowest-indexed legal vertex.
inline Stabilization stabilize(const GameState& gs, const Configuration& c) {
  return stabilize(gs, c, [](const std::vector<Vertex>& legal) { return legal.front(); });
}

/// σ(c): stabilization of c with the bank fired.
inline Configuration successor(const GameState& gs, const Configuration& c) {
  if (!gs.is_stable(c)) throw PreconditionError("successor: configuration is not stable");
  return stabilize(gs, fire(gs, c, gs.bank())).stable;
}

/// A σ-cycle of critical configurations, starting at its lexicographically
/// smallest member (which identifies the class).
struct CoevalenceClass {
  std::vector<Configuration> cycle;

  const Configuration& id() const { return cycle.front(); }
  std::size_t size() const noexcept { return cycle.size(); }
};

namespace detail {

// Number of nonnegative stable configurations, Π_{v≠bank} outdeg(v), or
// nullopt once it exceeds cap.
inline std::optional<std::size_t> stable_count(const GameState& gs, std::size_t cap) {
  std::size_t total = 1;
  for (Vertex v = 0; v < gs.size(); ++v) {
    if (v == gs.bank()) continue;
    const auto d = static_cast<std::size_t>(gs.outdegree(v));
    if (total > cap / d) return std::nullopt;
    total *= d;
  }
  return total;
}

inline CoevalenceClass rotate_to_min(std::vector<Configuration> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  return {std::move(cycle)};
}

}  // namespace detail

/// Every nonnegative stable configuration, in mixed-radix order over the
/// non-bank vertices (last vertex fastest).
inline std::vector<Configuration> nonnegative_stable_configurations(const GameState& gs, std::size_t cap = 100'000) {
  if (!detail::stable_count(gs, cap)) throw CapExceeded("nonnegative stable configuration count", cap);
  std::vector<Configuration> out;
  std::vector<Chips> digits(gs.size() - 1, 0);
  std::vector<Chips> radix;
  for (Vertex v = 0; v < gs.size(); ++v)
    if (v != gs.bank()) radix.push_back(gs.outdegree(v));
  for (;;) {
    out.push_back(Configuration::from_nonbank(gs.size(), gs.bank(), digits));
    std::size_t i = digits.size();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++digits[i] < radix[i]) break;
      digits[i] = 0;
    }
  }
}

/// The coevalence classes (σ-cycles) among nonnegative stable configurations,
/// ordered by class identifier. Every critical configuration is nonnegative,
/// so the census is complete.
inline std::vector<CoevalenceClass> critical_configurations(const GameState& gs, std::size_t cap = 100'000) {
  const auto states = nonnegative_stable_configurations(gs, cap);
  std::map<Configuration, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index.emplace(states[i], i);
  std::vector<std::size_t> next(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) next[i] = index.at(successor(gs, states[i]));

  enum : char { fresh, active, done };
  std::vector<char> mark(states.size(), fresh);
  std::vector<CoevalenceClass> classes;
  for (std::size_t s = 0; s < states.size(); ++s) {
    std::vector<std::size_t> path;
    std::size_t u = s;
    while (mark[u] == fresh) {
      mark[u] = active;
      path.push_back(u);
      u = next[u];
    }
    if (mark[u] == active) {
      std::vector<Configuration> cycle;
      auto it = std::find(path.begin(), path.end(), u);
      for (; it != path.end(); ++it) cycle.push_back(states[*it]);
      classes.push_back(detail::rotate_to_min(std::move(cycle)));
    }
    for (auto p : path) mark[p] = done;
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.id() < b.id(); });
  return classes;
}

enum class BankClass { small, fair_not_small, unfair };

inline const char* to_string(BankClass k) {
  switch (k) {
    case BankClass::small:
      return "small";
    case BankClass::fair_not_small:
      return "fair-not-small";
    case BankClass::unfair:
      return "unfair";
  }
  return "?";
}

/// small: every class has exactly h(bank) members; fair: all classes have the
/// same size.
inline BankClass classify_sizes(const std::vector<std::size_t>& sizes, const Integer& h) {
  if (std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return Integer(s) == h; })) return BankClass::small;
  const bool fair = std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s == sizes.front(); });
  return fair ? BankClass::fair_not_small : BankClass::unfair;
}

inline BankClass classify_bank(const GameState& gs, std::size_t cap = 100'000) {
  std::vector<std::size_t> sizes;
  for (const auto& c : critical_configurations(gs, cap)) sizes.push_back(c.size());
  return classify_sizes(sizes, gs.activities()[gs.bank()]);
}

/// [c]: stabilize, then iterate σ until a configuration repeats; returns the
/// identifier of the σ-cycle reached. At most `cap` successor steps are taken.
inline Configuration class_of(const GameState& gs, const Configuration& c, std::size_t cap = 100'000) {
  Configuration cur = stabilize(gs, c).stable;
  std::map<Configuration, std::size_t> seen;
  std::vector<Configuration> trail;
  for (std::size_t step = 0;; ++step) {
    if (step > cap) throw CapExceeded("successor iterations", cap);
    auto [it, inserted] = seen.emplace(cur, trail.size());
    if (!inserted) {
      std::vector<Configuration> cycle(trail.begin() + static_cast<std::ptrdiff_t>(it->second), trail.end());
      return detail::rotate_to_min(std::move(cycle)).id();
    }
    trail.push_back(cur);
    cur = successor(gs, cur);
  }
}

struct BijectionReport {
  std::size_t class_count = 0;
  Integer torsion_order;
  bool counts_match = false;
  bool injective = false;
  bool holds() const { return counts_match && injective; }
};

/// Checks that u + QᵀZ^V ↦ [u] is a bijection from K(G) to coevalence classes:
/// equal counts, and distinct torsion elements landing in distinct classes.
inline BijectionReport verify_bijection(const GameState& gs, std::size_t cap = 100'000) {
  BijectionReport rep;
  const auto classes = critical_configurations(gs, cap);
  const SmithCoordinates frame(laplacian(gs.graph()).transpose());
  rep.class_count = classes.size();
  rep.torsion_order = frame.group().torsion_order();
  rep.counts_match = Integer(rep.class_count) == rep.torsion_order;

  std::map<Configuration, IntVector> owner;
  rep.injective = true;
  for (const auto& e : frame.enumerate_torsion(cap)) {
    const IntVector x = frame.representative(e);
    std::vector<Chips> values;
    for (const auto& xi : x) {
      if (xi > std::numeric_limits<Chips>::max() || xi < std::numeric_limits<Chips>::min())
        throw CapExceeded("representative entry magnitude", static_cast<std::size_t>(std::numeric_limits<Chips>::max()));
      values.push_back(static_cast<Chips>(xi));
    }
    const Configuration id = class_of(gs, Configuration(gs.bank(), std::move(values)), cap);
    auto [it, inserted] = owner.emplace(id, x);
    if (!inserted) {
      IntVector diff(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - it->second[i];
      if (!frame.is_zero_class(diff)) rep.injective = false;
    }
  }
  return rep;
}

}  // namespace critgroup
