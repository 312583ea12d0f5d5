#pragma once

#include "critgroup/digraph.hpp"
#include "critgroup/error.hpp"
#include "critgroup/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace critgroup {

/// Bivariate integer polynomial in x and y, stored sparsely by (deg_x, deg_y).
class Polynomial2 {
 public:
  using Monomial = std::pair<unsigned, unsigned>;

  Polynomial2() = default;
  explicit Polynomial2(Integer constant) { add_term(0, 0, std::move(constant)); }

  static Polynomial2 x() { return monomial(1, 0); }
  static Polynomial2 y() { return monomial(0, 1); }
  static Polynomial2 monomial(unsigned dx, unsigned dy, Integer coeff = 1) {
    Polynomial2 p;
    p.add_term(dx, dy, std::move(coeff));
    return p;
  }

  void add_term(unsigned dx, unsigned dy, const Integer& coeff) {
    if (coeff == 0) return;
    auto& c = terms_[{dx, dy}];
    c += coeff;
    if (c == 0) terms_.erase({dx, dy});
  }

  Integer coefficient(unsigned dx, unsigned dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }

  Integer evaluate(const Integer& xv, const Integer& yv) const {
    Integer total = 0;
    for (const auto& [m, c] : terms_) total += c * boost::multiprecision::pow(xv, m.first) * boost::multiprecision::pow(yv, m.second);
    return total;
  }

  friend Polynomial2 operator+(Polynomial2 a, const Polynomial2& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m.first, m.second, c);
    return a;
  }

  friend Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b) {
    Polynomial2 out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
    return out;
  }

  friend bool operator==(const Polynomial2&, const Polynomial2&) = default;

  /// Terms in descending x-degree then y-degree, e.g. "x^2 + x + y".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Integer mag = abs_value(c);
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      first = false;
      const bool constant = m.first == 0 && m.second == 0;
      if (mag != 1 || constant) os << mag;
      auto var = [&](char name, unsigned d) {
        if (d == 0) return;
        os << name;
        if (d > 1) os << '^' << d;
      };
      var('x', m.first);
      var('y', m.second);
    }
    return os.str();
  }

 private:
  std::map<Monomial, Integer> terms_;
};

namespace detail {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

class TutteSolver {
 public:
  Polynomial2 solve(EdgeList edges) {
    unsigned loops = 0;
    EdgeList rest;
    for (const auto& e : edges) {
      if (e.first == e.second)
        ++loops;
      else
        rest.push_back(e);
    }
    std::sort(rest.begin(), rest.end());
    Polynomial2 core = solve_loopless(rest);
    return loops ? core * Polynomial2::monomial(0, loops) : core;
  }

 private:
  Polynomial2 solve_loopless(const EdgeList& edges) {
    if (edges.empty()) return Polynomial2(1);
    if (auto it = memo_.find(edges); it != memo_.end()) return it->second;

    const auto e = edges.front();
    EdgeList deleted(edges.begin() + 1, edges.end());
    EdgeList contracted;
    contracted.reserve(deleted.size());
    for (auto [a, b] : deleted) {
      if (a == e.second) a = e.first;
      if (b == e.second) b = e.first;
      contracted.emplace_back(std::min(a, b), std::max(a, b));
    }

    Polynomial2 result;
    if (is_bridge(e, deleted))
      result = Polynomial2::x() * solve(std::move(contracted));
    else
      result = solve(std::move(deleted)) + solve(std::move(contracted));
    memo_.emplace(edges, result);
    return result;
  }

  // e is a bridge when its endpoints are disconnected in `others`.
  static bool is_bridge(const std::pair<Vertex, Vertex>& e, const EdgeList& others) {
    std::vector<Vertex> frontier{e.first};
    std::vector<Vertex> seen{e.first};
    while (!frontier.empty()) {
      Vertex v = frontier.back();
      frontier.pop_back();
      for (const auto& [a, b] : others) {
        Vertex next;
        if (a == v)
          next = b;
        else if (b == v)
          next = a;
        else
          continue;
        if (next == e.second) return false;
        if (std::find(seen.begin(), seen.end(), next) == seen.end()) {
          seen.push_back(next);
          frontier.push_back(next);
        }
      }
    }
    return true;
  }

  std::map<EdgeList, Polynomial2> memo_;
};

}  // namespace detail

/// Tutte polynomial T(G; x, y) of an undirected graph by memoized
/// deletion-contraction (bridges contribute x, loops contribute y).
inline Polynomial2 tutte(const Digraph& g, std::size_t cap_edges = 20) {
  if (!g.is_symmetric()) throw PreconditionError("tutte: graph is not undirected");
  const auto slots = edge_slots(g);
  if (slots.size() > cap_edges) throw CapExceeded("tutte edge count", cap_edges);
  detail::EdgeList edges;
  for (const auto& s : slots) edges.emplace_back(s.u, s.v);
  return detail::TutteSolver{}.solve(std::move(edges));
}

}  // namespace critgroup
