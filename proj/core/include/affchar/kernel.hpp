#pragma once

#include "affchar/charring.hpp"

namespace affchar {

// The t -> infinity Macdonald kernel apparatus for one affine type at one
// truncation order.  Immutable after build_kernels; scalar products are
// pure and may be evaluated concurrently against a shared KernelSet.
struct KernelSet {
  const AffineType* type = nullptr;
  int trunc = 0;
  CharElem delta_q_inf;    // Macdonald kernel, constant term one
  CharElem delta_inf_inf;  // finite kernel (1/|W|) prod_{alpha in R'} (1 - e^alpha)
  CharElem s_q;            // S(q) = delta_q_inf / delta_inf_inf
  CharElem s_q_inv;        // 1/S(q), inverted order by order
  QSeries nabla_ct;        // closed-form constant term of nabla
  QSeries pf;              // the node product prod_i prod_j (1 - u^{...})

  const AffineType& T() const { return *type; }
};

KernelSet build_kernels(const AffineType& T, int trunc);

// nabla(q,infinity) expanded as a truncated product over the real roots;
// used to cross-validate the closed-form constant term.
CharElem build_nabla(const AffineType& T, int trunc);
QSeries nabla_ct_closed_form(const AffineType& T, int trunc);

// [m_a m_b Delta(q,infinity)] and the finite-kernel analogue; the building
// block for all scalar products of invariant elements.
QSeries ct_pair(const KernelSet& K, const FiniteWeight& a, const FiniteWeight& b);
QSeries ct_pair_finite(const KernelSet& K, const FiniteWeight& a, const FiniteWeight& b);

// <f,g>_q = [f g^iota Delta(q,infinity)]; inputs must be W-invariant.
QSeries scalar_q(const CharElem& f, const CharElem& g, const KernelSet& K);
// <f,g> = [f g^iota Delta(infinity,infinity)]
QSeries scalar_finite(const CharElem& f, const CharElem& g, const KernelSet& K);

// cached orbit of a dominant weight (shared, process lifetime)
const std::vector<FiniteWeight>& orbit_cached(const AffineType& T, const FiniteWeight& dom);

}  // namespace affchar
