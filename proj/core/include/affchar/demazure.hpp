#pragma once

#include <unordered_map>
#include <vector>

#include "affchar/charring.hpp"

namespace affchar {

struct MacdonaldBasis;

// Level-one affine character with exact integer coefficients: a finite
// mapping (finite part, delta numerator) -> multiplicity.
class AffCharElem {
 public:
  struct Key {
    FiniteWeight fw;
    Int delta_num;  // delta coefficient = delta_num / a0
    bool operator==(const Key& o) const { return fw == o.fw && delta_num == o.delta_num; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      return FWHash{}(k.fw) * 1099511628211ull ^ static_cast<size_t>(k.delta_num * 2654435761ull);
    }
  };
  using Map = std::unordered_map<Key, Int, KeyHash>;

  AffCharElem(const AffineType& T, Int level) : type_(&T), level_(level) {}

  const AffineType& type() const { return *type_; }
  Int level() const { return level_; }
  const Map& terms() const { return terms_; }

  void add(const FiniteWeight& fw, Int delta_num, Int count) {
    if (count == 0) return;
    Key k{fw, delta_num};
    auto [it, inserted] = terms_.try_emplace(k, count);
    if (!inserted) {
      it->second += count;
      if (it->second == 0) terms_.erase(it);
    }
  }

 private:
  const AffineType* type_;
  Int level_;
  Map terms_;
};

// Isobaric Demazure operator for an affine node 0 <= i <= n, extended
// linearly: with k = Upsilon(alpha_i^vee),
//   k >= 0   : e^Upsilon -> sum_{j=0..k} e^{Upsilon - j alpha_i}
//   k == -1  : e^Upsilon -> 0
//   k <= -2  : e^Upsilon -> -sum_{j=1..-k-1} e^{Upsilon + j alpha_i}
AffCharElem demazure_op(const AffineType& T, int i, const AffCharElem& f);

// The same string operator on the finite weight lattice, node 1 <= i <= n.
std::unordered_map<FiniteWeight, Int, FWHash> finite_demazure_op(
    const AffineType& T, int i, const std::unordered_map<FiniteWeight, Int, FWHash>& f);

// Character of the level-one Demazure module attached to lambda + Lambda_0,
// pushed into R_q (e^delta = q^{-1} = u^{a0}) and normalized by a u-power
// shift so that the coefficient of e^lambda starts at u^0.
CharElem demazure_character(const AffineType& T, const FiniteWeight& lambda, int trunc);

struct DemazureComparison {
  bool type_one;       // comparison mode of the ambient type
  bool equal;          // demazure character == P (mod truncation)
  bool dominates;      // P - demazure character >= 0 coefficientwise
  bool strict;         // some coefficient of P - demazure character is > 0
  CharElem difference; // P - demazure character
};

// Type I: asserts equality with the Macdonald polynomial; type II: checks
// coefficientwise domination and reports the difference.
DemazureComparison compare_demazure_macdonald(const MacdonaldBasis& basis,
                                              const FiniteWeight& lambda_dom);

}  // namespace affchar
