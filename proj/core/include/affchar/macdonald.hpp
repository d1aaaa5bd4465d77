#pragma once

#include <optional>

#include "affchar/kernel.hpp"

namespace affchar {

// Integer-coefficient Laurent polynomial in u, used as compact storage for
// Macdonald-polynomial coordinates and Kostka columns (their coefficients
// are nonnegative integers).
using IntSeries = std::vector<std::pair<int32_t, Int>>;

QSeries int_to_qseries(const IntSeries& a, int trunc);
IntSeries qseries_to_int_checked(const QSeries& a, const char* what);
// acc += a * b
void addmul_int(QSeries& acc, const IntSeries& a, const QSeries& b);
// acc += scalar * u^shift * a
void int_add_scaled(IntSeries& acc, const IntSeries& a, Int scalar, int shift);

// Triangular orthogonal basis {P(mu)} over a dominance-closed set of
// dominant weights, stored in monomial coordinates: P(order[i]) =
// sum_j mcoord[i][j] m_{order[j]}.  norms_gs are the Gram-Schmidt square
// norms, norms_cf the closed-form products; the two agree modulo the
// truncation order.
struct MacdonaldBasis {
  const AffineType* type_ = nullptr;
  const KernelSet* kernel_ = nullptr;
  int trunc_ = 0;
  std::vector<FiniteWeight> order;  // ascending (root height, lex)
  std::unordered_map<FiniteWeight, int, FWHash> index;
  std::vector<std::vector<int>> below;  // indices nu with order[nu] <= order[i], ascending
  std::vector<std::vector<std::pair<int, IntSeries>>> mcoord;
  std::vector<QSeries> norms_gs, norms_cf, norms_gs_inv;
  std::vector<Int> ht_scaled;  // root height of order[i] times ht_denom
  Int ht_denom = 1;

  const AffineType& type() const { return *type_; }
  const KernelSet& kernel() const { return *kernel_; }
  int trunc() const { return trunc_; }
  bool contains(const FiniteWeight& w) const { return index.count(w) != 0; }
  int index_of(const FiniteWeight& w) const;

  CharElem poly(const FiniteWeight& w) const;      // P as an element of R_q
  CharElem poly_by_index(int i) const;
  const QSeries& gs_norm(const FiniteWeight& w) const;
  const QSeries& cf_norm(const FiniteWeight& w) const;
};

// Basis over all dominant mu <= target (Gram-Schmidt in dominance order).
MacdonaldBasis macdonald_basis(const FiniteWeight& target, const KernelSet& K);
// Basis over the union of the dominance ideals of several targets.
MacdonaldBasis macdonald_basis_set(const std::vector<FiniteWeight>& targets, const KernelSet& K);

// Square-norm closed form: the double product over nodes 1..n-1 and the
// separate node-n factor, with q-powers converted to u-powers.
QSeries norm_closed_form(const AffineType& T, const FiniteWeight& lambda_dom, int trunc);

}  // namespace affchar
