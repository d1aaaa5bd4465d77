#pragma once

#include <unordered_map>
#include <vector>

#include "affchar/affine_data.hpp"
#include "affchar/qseries.hpp"
#include "affchar/weyl.hpp"

namespace affchar {

// Element of the character ring R_q: a sparse finite mapping from finite
// weights to truncated q-series.
class CharElem {
 public:
  using Map = std::unordered_map<FiniteWeight, QSeries, FWHash>;

  CharElem() = default;
  CharElem(const AffineType& T, int trunc) : type_(&T), trunc_(trunc) {}

  static CharElem exp(const AffineType& T, const FiniteWeight& w, int trunc) {
    CharElem f(T, trunc);
    f.add(w, QSeries::one(trunc));
    return f;
  }
  static CharElem unit(const AffineType& T, int trunc) {
    return exp(T, FiniteWeight(T.n), trunc);
  }

  const AffineType& type() const { return *type_; }
  int trunc() const { return trunc_; }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  QSeries coeff(const FiniteWeight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QSeries::zero(trunc_) : it->second;
  }
  void add(const FiniteWeight& w, const QSeries& s);
  void add_term(const FiniteWeight& w, int exp, const Rat& c);

  CharElem& operator+=(const CharElem& o);
  CharElem& operator-=(const CharElem& o);
  CharElem scaled(const QSeries& s) const;   // multiply every series by s
  CharElem shifted(int uexp) const;          // multiply by u^uexp
  CharElem truncated(int new_trunc) const;

  friend CharElem operator+(const CharElem& a, const CharElem& b);
  friend CharElem operator-(const CharElem& a, const CharElem& b);

  bool equal_mod(const CharElem& o, int N) const;
  // every coefficient series of o dominates coefficientwise: (*this - o) >= 0
  bool dominates(const CharElem& o, int N) const;

  // checked W-invariance; the hint records constructions that are
  // symmetric by construction (orbit sums, products of invariants)
  bool is_weyl_invariant() const;
  bool symmetric_hint() const { return symmetric_hint_; }
  void set_symmetric_hint(bool v) { symmetric_hint_ = v; }

  // coefficient series at each dominant weight of the support, unsorted
  std::vector<std::pair<FiniteWeight, QSeries>> dominant_coefficients() const;
  std::vector<FiniteWeight> sorted_support() const;

 private:
  const AffineType* type_ = nullptr;
  int32_t trunc_ = 0;
  bool symmetric_hint_ = false;
  Map terms_;
};

// m_lambda: sum of e^mu over the orbit of lambda (coefficients u^0).
CharElem monomial(const AffineType& T, const FiniteWeight& lambda, int trunc);

// e^lambda -> e^{-w_circ(lambda)}; q-series coefficients unchanged.
CharElem iota(const CharElem& f);
FiniteWeight iota_weight(const AffineType& T, const FiniteWeight& w);

// coefficient of e^0
QSeries constant_term(const CharElem& f);

// convolution product
CharElem mul(const CharElem& f, const CharElem& g);

// Weyl character of the finite irreducible module with highest weight
// lambda (dominant), via the isobaric Demazure-operator string formula
// applied along a reduced word for the longest element.
CharElem irreducible_character(const AffineType& T, const FiniteWeight& lambda, int trunc);
// same, along an explicitly supplied reduced word (used by tests)
CharElem irreducible_character_word(const AffineType& T, const FiniteWeight& lambda, int trunc,
                                    const std::vector<int>& word);

// Weight multiplicities of the finite irreducible module at dominant
// weights, by the Freudenthal recursion.  Independent of the Demazure
// route; pairs are sorted by (root height, lex).
std::vector<std::pair<FiniteWeight, Int>> dominant_weight_multiplicities(
    const AffineType& T, const FiniteWeight& lambda);

}  // namespace affchar
