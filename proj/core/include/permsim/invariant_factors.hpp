#ifndef PERMSIM_INVARIANT_FACTORS_HPP
#define PERMSIM_INVARIANT_FACTORS_HPP

#include <vector>

#include "permsim/matrix.hpp"
#include "permsim/poly.hpp"

namespace permsim {

// Invariant factors of A: the nonconstant diagonal of the Smith normal form
// of xI - A over Ops[x], each monic, each dividing the next. Computed with
// elementary row/column operations; pivots are the minimal-degree nonzero
// entry of the trailing submatrix, ties broken row-major, so the intermediate
// states (and any future trace output) are deterministic.
template <class Ops>
std::vector<Poly<Ops>> invariant_factor_polys(const Mat<Ops>& a) {
  if (!a.is_square()) throw error("invariant factors require a square matrix");
  const Ops ops = a.ops();
  const int n = a.rows();
  using P = Poly<Ops>;

  std::vector<std::vector<P>> m(static_cast<std::size_t>(n),
                                std::vector<P>(static_cast<std::size_t>(n), P(ops)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j)
        m[i][j] = P(ops, {ops.neg(a.at(i, j)), ops.one()});
      else if (!ops.is_zero(a.at(i, j)))
        m[i][j] = P::constant(ops, ops.neg(a.at(i, j)));
    }
  }

  auto swap_cols = [&](int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < n; ++i) std::swap(m[i][c1], m[i][c2]);
  };

  for (int k = 0; k < n; ++k) {
    int pi = -1, pj = -1;
    for (int i = k; i < n; ++i) {
      for (int j = k; j < n; ++j) {
        if (m[i][j].is_zero()) continue;
        if (pi < 0 || m[i][j].degree() < m[pi][pj].degree()) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    std::swap(m[k], m[pi]);
    swap_cols(k, pj);

    // Each row/column swap strictly lowers the pivot degree, so this loop
    // terminates; it exits only once the pivot alone occupies its row and
    // column and divides every trailing entry.
    for (;;) {
      bool reduced = false;
      for (int i = k + 1; i < n && !reduced; ++i) {
        if (m[i][k].is_zero()) continue;
        P q = m[i][k].divmod(m[k][k]).first;
        for (int j = k; j < n; ++j) m[i][j] = m[i][j].sub(q.mul(m[k][j]));
        if (!m[i][k].is_zero()) {
          std::swap(m[k], m[i]);
          reduced = true;
        }
      }
      if (reduced) continue;
      for (int j = k + 1; j < n && !reduced; ++j) {
        if (m[k][j].is_zero()) continue;
        P q = m[k][j].divmod(m[k][k]).first;
        for (int i = k; i < n; ++i) m[i][j] = m[i][j].sub(q.mul(m[i][k]));
        if (!m[k][j].is_zero()) {
          swap_cols(k, j);
          reduced = true;
        }
      }
      if (reduced) continue;

      bool repaired = false;
      for (int i = k + 1; i < n && !repaired; ++i) {
        for (int j = k + 1; j < n && !repaired; ++j) {
          if (m[i][j].is_zero()) continue;
          if (!m[i][j].divmod(m[k][k]).second.is_zero()) {
            for (int jj = k; jj < n; ++jj) m[k][jj] = m[k][jj].add(m[i][jj]);
            repaired = true;
          }
        }
      }
      if (!repaired) break;
    }
  }

  std::vector<P> out;
  for (int k = 0; k < n; ++k) {
    if (m[k][k].degree() >= 1) out.push_back(m[k][k].monic());
  }
  return out;
}

// det(xI - A) as the product of the invariant factors: one algorithm, one
// source of truth; an independent expansion cross-checks it in the tests.
template <class Ops>
Poly<Ops> char_poly_of(const Mat<Ops>& a) {
  Poly<Ops> out = Poly<Ops>::constant(a.ops(), a.ops().one());
  for (const Poly<Ops>& f : invariant_factor_polys(a)) out = out.mul(f);
  return out;
}

}  // namespace permsim

#endif
