#pragma once

#include <string>
#include <vector>

#include "affchar/rat.hpp"
#include "affchar/weights.hpp"

namespace affchar {

// One real or imaginary affine root.  The finite part is kept in
// simple-root coordinates (alpha_1..alpha_n); half-integer entries occur
// only for the A_{2n}^(2) families.
struct Root {
  std::vector<Rat> finite_rt;  // coordinates in the simple-root basis
  Rat delta;                   // coefficient of delta (the level)
  bool imaginary = false;

  bool operator==(const Root& o) const {
    return finite_rt == o.finite_rt && delta == o.delta && imaginary == o.imaginary;
  }
};

enum class FamilyKind {
  untwisted,  // X_n^(1)
  a2n_2,      // A_{2n}^(2), n >= 1 (includes A_2^(2))
  a2nm1_2,    // A_{2n-1}^(2), n >= 2
  dnp1_2,     // D_{n+1}^(2), n >= 2
  e6_2,       // E_6^(2)
  d4_3,       // D_4^(3)
};

// Full Table-Aff datum for one indecomposable affine type: affine Cartan
// matrix, marks/comarks, symmetrizers, the normalized bilinear form on the
// finite part, and the finite root system built by closure.
struct AffineType {
  std::string label;  // canonical label, e.g. "A2^(2)"
  FamilyKind kind = FamilyKind::untwisted;
  int n = 0;   // finite rank (nodes 1..n carry the finite Cartan matrix)
  int r = 1;   // twist order (Table Aff number)
  int a0 = 1;  // mark of node 0 (2 exactly for A_{2n}^(2))
  bool type_one = false;       // simply-laced untwisted, or twisted
  bool fin_simply_laced = false;

  // index 0..n throughout
  std::vector<std::vector<Int>> cartan;  // a_{ij} = alpha_j(alpha_i^vee)
  std::vector<Int> marks;                // a_i
  std::vector<Int> comarks;              // a_i^vee
  std::vector<Rat> d;                    // d_i = a_i / a_i^vee
  std::vector<Rat> s;                    // s_i = 1/d_i = (alpha_i,alpha_i)/2

  // finite root system (positive roots), index 1..n collapsed to 0..n-1 in
  // coordinate vectors
  std::vector<std::vector<Int>> rt_pos;   // root coordinates
  std::vector<FiniteWeight> wt_pos;       // the same roots in the weight basis
  std::vector<Rat> len2_pos;              // (beta,beta)
  std::vector<Int> theta_rt;              // theta = sum_{i>=1} a_i alpha_i
  FiniteWeight theta_wt;
  Rat len2_short, len2_long;              // root lengths occurring in the finite system
  Int weyl_order = 0;                     // |W| of the finite Weyl group

  std::vector<std::vector<Rat>> inv_cartan;  // inv_cartan[i][j]: alpha_i-coord of Lambda_j
  std::vector<std::vector<Rat>> fw_gram;     // (Lambda_i, Lambda_j)
  std::vector<int> iota_perm;  // -w_circ(Lambda_i) = Lambda_{iota_perm[i]} (0-based)
  std::vector<int> wcirc_word;  // reduced word for the longest element (nodes 1..n)

  bool is_a2n2() const { return kind == FamilyKind::a2n_2; }
  // r_{alpha_i} for a node 1..n
  Int r_node(int i) const;
};

// Parses a type label of the form <Letter><rank>^(<twist>) and returns the
// immutable datum; results are cached for the lifetime of the process.
const AffineType& load_type(const std::string& label);

// Normalized standard bilinear form extended to P; both weights must belong
// to the same type's coordinate system.
Rat bilinear(const AffineType& T, const AffineWeight& x, const AffineWeight& y);
Rat bilinear_finite(const AffineType& T, const FiniteWeight& x, const FiniteWeight& y);

// (x, alpha) for a real root alpha given in simple-root coordinates.
Rat form_weight_root(const AffineType& T, const FiniteWeight& x, const std::vector<Rat>& alpha_rt);

// max{(alpha,alpha)/2, 1}; rejects imaginary roots.
Int r_alpha(const AffineType& T, const Root& alpha);

Rat root_len2(const AffineType& T, const Root& alpha);

// finite part of a real root in the fundamental-weight basis (integral)
FiniteWeight root_weight(const AffineType& T, const Root& alpha);

// All elements of R^{re,+} with delta-coefficient <= level_bound, ordered by
// (level, lex on finite part); positive_real_roots(b) is a prefix of
// positive_real_roots(b') whenever b <= b'.
std::vector<Root> positive_real_roots(const AffineType& T, const Rat& level_bound);

}  // namespace affchar
