#pragma once

#include "critgroup/error.hpp"
#include "critgroup/integer.hpp"
#include "critgroup/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace critgroup {

/// Smith normal form with transforms: l * input * n == d, with d diagonal and
/// diag[i] | diag[i+1]. `l_inv` is the exact inverse of `l`, accumulated
/// alongside it.
struct SnfResult {
  IntMatrix l;
  IntMatrix d;
  IntMatrix n;
  IntMatrix l_inv;
  IntVector diag;

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diag.begin(), diag.end(), [](const Integer& g) { return g != 0; }));
  }
};

namespace detail {

// Minimal nonzero |entry| in the trailing submatrix starting at (t, t); ties go
// to the lowest row, then the lowest column.
inline std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& d,
                                                                         std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs_value(d(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

}  // namespace detail

/// Smith normal form by elementary unimodular row and column operations.
inline SnfResult snf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfResult res{IntMatrix::identity(rows), m, IntMatrix::identity(cols), IntMatrix::identity(rows), {}};
  IntMatrix& d = res.d;
  IntMatrix& l = res.l;
  IntMatrix& n = res.n;
  IntMatrix& l_inv = res.l_inv;

  // Every row operation E applied to d is applied to l (l <- E l) and, inverted,
  // on the right of l_inv (l_inv <- l_inv E^-1), which is a column operation.
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    l.swap_rows(a, b);
    l_inv.swap_cols(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_row_multiple(dst, src, f);
    l.add_row_multiple(dst, src, f);
    l_inv.add_col_multiple(src, dst, -f);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    n.swap_cols(a, b);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    d.add_col_multiple(dst, src, f);
    n.add_col_multiple(dst, src, f);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      auto pivot = detail::smallest_pivot(d, t);
      if (!pivot) {
        exhausted = true;
        break;
      }
      row_swap(t, pivot->first);
      col_swap(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        row_add(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        col_add(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise pull an
      // offending row into row t and reduce again.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!divides(d(t, t), d(i, j))) {
            offender = i;
            break;
          }
      if (!offender) break;
      row_add(t, *offender, 1);
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      l.negate_row(t);
      for (std::size_t r = 0; r < rows; ++r) l_inv(r, t) = -l_inv(r, t);
    }
  }

  res.diag.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) res.diag[i] = d(i, i);
  return res;
}

/// Checks every SnfResult invariant exactly: l*m*n == d, unimodularity of l and
/// n, l*l_inv == I, d diagonal with nonnegative entries under divisibility.
inline bool verify_snf(const IntMatrix& m, const SnfResult& s) {
  if (s.l * m * s.n != s.d) return false;
  if (s.l * s.l_inv != IntMatrix::identity(m.rows())) return false;
  if (abs_value(determinant(s.l)) != 1 || abs_value(determinant(s.n)) != 1) return false;
  for (std::size_t r = 0; r < s.d.rows(); ++r)
    for (std::size_t c = 0; c < s.d.cols(); ++c)
      if (r != c && s.d(r, c) != 0) return false;
  for (std::size_t i = 0; i < s.diag.size(); ++i) {
    if (s.diag[i] < 0 || s.diag[i] != s.d(i, i)) return false;
    if (i + 1 < s.diag.size() && !divides(s.diag[i], s.diag[i + 1])) return false;
  }
  return true;
}

/// M ≈ M' (equivalent under unimodular transforms) iff their Smith diagonals agree.
inline bool snf_diag_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("snf_diag_equal: matrices have different dimensions");
  return snf(a).diag == snf(b).diag;
}

/// Integer x with basis * x == v, if one exists. Uses a precomputed SNF of basis.
inline std::optional<IntVector> lattice_solve(const SnfResult& s, std::span<const Integer> v) {
  if (s.l.cols() != v.size()) throw DimensionMismatch("lattice vector length differs from basis rows");
  const IntVector lv = s.l * v;
  IntVector y(s.n.rows());
  for (std::size_t i = 0; i < lv.size(); ++i) {
    if (i < s.diag.size()) {
      if (!divides(s.diag[i], lv[i])) return std::nullopt;
      if (s.diag[i] != 0) y[i] = lv[i] / s.diag[i];
    } else if (lv[i] != 0) {
      return std::nullopt;
    }
  }
  return s.n * y;
}

inline std::optional<IntVector> lattice_solve(const IntMatrix& basis, std::span<const Integer> v) {
  if (basis.rows() != v.size()) throw DimensionMismatch("lattice vector length differs from basis rows");
  return lattice_solve(snf(basis), v);
}

inline bool lattice_member(const SnfResult& s, std::span<const Integer> v) {
  return lattice_solve(s, v).has_value();
}

/// v lies in the column lattice of basis.
inline bool lattice_member(const IntMatrix& basis, std::span<const Integer> v) {
  return lattice_solve(basis, v).has_value();
}

struct Echelon {
  IntMatrix form;
  std::vector<std::size_t> pivot_cols;
};

/// Row echelon form by Bareiss fraction-free elimination; every intermediate
/// entry is a minor of the input, so all divisions are exact.
inline Echelon fraction_free_echelon(const IntMatrix& m) {
  Echelon e{m, {}};
  IntMatrix& a = e.form;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

inline std::size_t rank(const IntMatrix& m) { return fraction_free_echelon(m).pivot_cols.size(); }

/// Divides out the content and makes the first nonzero entry positive.
inline IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

/// Basis of the right nullspace over Q, each vector scaled to a primitive
/// integer vector (gcd 1, first nonzero entry positive).
inline std::vector<IntVector> rational_nullspace(const IntMatrix& m) {
  const Echelon e = fraction_free_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(cols);
    x[f] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (x[j] != 0) acc += Rational(e.form(k, j)) * x[j];
      x[pc] = -acc / Rational(e.form(k, pc));
    }
    Integer den = 1;
    for (const auto& q : x) den = lcm(den, boost::multiprecision::denominator(q));
    IntVector v(cols);
    for (std::size_t i = 0; i < cols; ++i)
      v[i] = boost::multiprecision::numerator(x[i]) * (den / boost::multiprecision::denominator(x[i]));
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

}  // namespace critgroup
