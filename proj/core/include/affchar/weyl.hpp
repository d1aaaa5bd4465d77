#pragma once

#include <utility>
#include <vector>

#include "affchar/affine_data.hpp"

namespace affchar {

// Pairing Lambda(alpha_i^vee) for an affine node 0 <= i <= n.
Int pairing(const AffineType& T, const AffineWeight& x, int i);

// s_i(x) = x - x(alpha_i^vee) * alpha_i for an affine node 0 <= i <= n.
AffineWeight simple_reflection(const AffineType& T, int i, const AffineWeight& x);

// Finite reflection on the weight lattice, node 1 <= i <= n.
FiniteWeight finite_reflection(const AffineType& T, int i, const FiniteWeight& x);

bool is_dominant(const FiniteWeight& x);
bool is_antidominant(const FiniteWeight& x);

// Full orbit under the finite Weyl group, breadth-first closure.
std::vector<FiniteWeight> weyl_orbit(const AffineType& T, const FiniteWeight& x);

// The unique anti-dominant element of the orbit of x.
FiniteWeight w_circ(const AffineType& T, const FiniteWeight& x);
// The unique dominant element of the orbit of x.
FiniteWeight dominant_rep(const AffineType& T, const FiniteWeight& x);

// x in simple-root coordinates (rational for A_{2n}^(2) differences).
std::vector<Rat> root_coords(const AffineType& T, const FiniteWeight& x);
// Sum of the simple-root coordinates of x.
Rat root_height(const AffineType& T, const FiniteWeight& x);

// Membership of x in the cone Qbar^+.
bool in_qbar_plus(const AffineType& T, const FiniteWeight& x);
// mu <= lambda in the dominance order (lambda - mu in Qbar^+).
bool dominance_leq(const AffineType& T, const FiniteWeight& mu, const FiniteWeight& lambda);

// All dominant mu <= lambda, sorted by descending root_height(lambda - mu)
// and then lexicographically; lambda itself is last.
std::vector<FiniteWeight> dominants_below(const AffineType& T, const FiniteWeight& lambda);

// All dominant mu with mu - base in Qbar^+ and root_height(mu - base) <=
// height_bound, in the same order as dominants_below.
std::vector<FiniteWeight> dominants_above(const AffineType& T, const FiniteWeight& base,
                                          const Rat& height_bound);

// Walks Lambda into the dominant chamber by simple reflections (smallest
// strictly negative node first).  Returns the dominant representative and
// the word i_1..i_k with s_{i_1} ... s_{i_k}(result) = Lambda.
std::pair<AffineWeight, std::vector<int>> to_dominant(const AffineType& T,
                                                      const AffineWeight& x);

}  // namespace affchar
