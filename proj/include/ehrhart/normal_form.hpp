#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "ehrhart/int_matrix.hpp"

namespace ehrhart {

struct SnfResult {
  IntMatrix u;  // left transform, unimodular
  IntMatrix v;  // right transform, unimodular
  IntMatrix s;  // diagonal, nonnegative, divisibility chain
};

// Column-style Hermite normal form: H = M * U with U unimodular.
// H has a lower-triangular profile with positive pivots; entries right of
// a pivot are zero, entries left of a pivot in its row lie in [0, pivot).
inline std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  size_t p = 0;  // next pivot column
  for (size_t r = 0; r < h.rows() && p < h.cols(); ++r) {
    // gcd-drive the nonzero entries of row r (columns >= p) into column p
    for (;;) {
      size_t best = h.cols();
      for (size_t j = p; j < h.cols(); ++j) {
        if (h(r, j) == 0) continue;
        if (best == h.cols() || cmp(abs(h(r, j)), abs(h(r, best))) < 0) best = j;
      }
      if (best == h.cols()) break;  // row is zero from p on
      if (best != p) {
        h.swap_cols(p, best);
        u.swap_cols(p, best);
      }
      bool done = true;
      for (size_t j = p; j < h.cols(); ++j) {
        if (j == p || h(r, j) == 0) continue;
        Int f = -floor_div(h(r, j), h(r, p));
        h.add_col_multiple(j, p, f);
        u.add_col_multiple(j, p, f);
        if (h(r, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, p) == 0) continue;  // no pivot in this row
    if (h(r, p) < 0) {
      h.negate_col(p);
      u.negate_col(p);
    }
    for (size_t j = 0; j < p; ++j) {
      Int f = -floor_div(h(r, j), h(r, p));
      h.add_col_multiple(j, p, f);
      u.add_col_multiple(j, p, f);
    }
    ++p;
  }
  return {h, u};
}

// Smith normal form by gcd-driven row/column elimination with transform
// tracking: u * m * v = s.
inline SnfResult snf(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  size_t n = std::min(s.rows(), s.cols());
  for (size_t t = 0; t < n; ++t) {
  restart:
    // locate a smallest-magnitude nonzero pivot in the trailing block
    size_t pi = s.rows(), pj = s.cols();
    for (size_t i = t; i < s.rows(); ++i)
      for (size_t j = t; j < s.cols(); ++j) {
        if (s(i, j) == 0) continue;
        if (pi == s.rows() || cmp(abs(s(i, j)), abs(s(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == s.rows()) break;  // trailing block is zero
    if (pi != t) {
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
    }
    if (pj != t) {
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);
    }
    // clear row t and column t
    bool clean = true;
    for (size_t i = t + 1; i < s.rows(); ++i) {
      if (s(i, t) == 0) continue;
      Int f = -floor_div(s(i, t), s(t, t));
      s.add_row_multiple(i, t, f);
      u.add_row_multiple(i, t, f);
      if (s(i, t) != 0) clean = false;
    }
    for (size_t j = t + 1; j < s.cols(); ++j) {
      if (s(t, j) == 0) continue;
      Int f = -floor_div(s(t, j), s(t, t));
      s.add_col_multiple(j, t, f);
      v.add_col_multiple(j, t, f);
      if (s(t, j) != 0) clean = false;
    }
    if (!clean) goto restart;
    // enforce divisibility: s(t,t) must divide every trailing entry
    for (size_t i = t + 1; i < s.rows(); ++i)
      for (size_t j = t + 1; j < s.cols(); ++j)
        if (s(i, j) % s(t, t) != 0) {
          s.add_col_multiple(t, j, Int(1));
          v.add_col_multiple(t, j, Int(1));
          goto restart;
        }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(v), std::move(s)};
}

// Basis (as matrix columns) of the saturated lattice lin(W) cap Z^D for
// linearly independent integer vectors W. Every w_i has integer
// coordinates in the returned basis.
inline IntMatrix saturation_basis(const std::vector<IntVec>& w) {
  if (w.empty()) throw EmptyInput("saturation_basis: no generators");
  IntMatrix a = IntMatrix::from_columns(w);
  size_t n = w.size();
  if (detail::RatMatrix(a).rank() != n)
    throw DependentGenerators("saturation_basis: generators are linearly dependent");
  SnfResult r = snf(a);
  // u * a * v = s  =>  lin(a) = u^{-1} lin(s), and lin(s) cap Z^D is
  // spanned by e_1..e_n, so the basis is the first n columns of u^{-1}.
  detail::RatMatrix uinv = detail::inverse(detail::RatMatrix(r.u));
  IntMatrix basis(a.rows(), n);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < n; ++j) {
      assert(is_integral(uinv(i, j)));
      basis(i, j) = num(uinv(i, j));
    }
  return basis;
}

// Coordinates of an integer vector in a saturated-lattice basis; they are
// integral whenever x lies in the lattice spanned by the basis columns.
inline IntVec lattice_coordinates(const IntMatrix& basis, const IntVec& x) {
  detail::RatMatrix a(basis);
  RatVec sol;
  bool ok = detail::solve_linear(a, to_rat_vec(x), sol);
  assert(ok);
  (void)ok;
  IntVec c(sol.size());
  for (size_t i = 0; i < sol.size(); ++i) {
    assert(is_integral(sol[i]));
    c[i] = num(sol[i]);
  }
  return c;
}

}  // namespace ehrhart
