#pragma once

#include <map>
#include <optional>

#include "affchar/macdonald.hpp"

namespace affchar {

// Filtration or Jordan-Holder multiplicities: a finite mapping from
// (dominant weight, total u-shift) to a positive integer.  The u-shift is
// a0*s for a delta-shift s in (1/a0)Z.
struct MultTable {
  enum class Source { weyl_filtration, jordan_holder };
  Source source{};
  std::map<std::pair<FiniteWeight, int>, Int> entries;

  Int at(const FiniteWeight& w, int shift_num) const {
    auto it = entries.find({w, shift_num});
    return it == entries.end() ? 0 : it->second;
  }
  void set(const FiniteWeight& w, int shift_num, Int m) {
    if (m != 0) entries[{w, shift_num}] = m;
  }
};

// Shared caches for the reciprocity machinery: one kernel, one triangular
// basis over a dominance-closed region, Kostka columns, irreducible
// characters and the pairing primitives [m_sigma s_inv Delta].
class BggEngine {
 public:
  BggEngine(const KernelSet& K, const std::vector<FiniteWeight>& region_targets);

  const KernelSet& kernel() const { return *K_; }
  const MacdonaldBasis& basis() const { return basis_; }
  const AffineType& type() const { return K_->T(); }
  int trunc() const { return K_->trunc; }

  const std::vector<std::pair<int, Int>>& kostka_column(int idx);
  const CharElem& chi(const FiniteWeight& lambda_dom);
  const QSeries& gs_value(const FiniteWeight& sigma);
  const MultTable& jordan_holder(const FiniteWeight& mu_dom, Int shift_num);

 private:
  const KernelSet* K_;
  MacdonaldBasis basis_;
  std::vector<std::pair<FiniteWeight, QSeries>> sinv_dom_;
  std::unordered_map<int, std::vector<std::pair<int, Int>>> kostka_;
  std::unordered_map<FiniteWeight, CharElem, FWHash> chi_;
  std::unordered_map<FiniteWeight, QSeries, FWHash> gs_;
  std::map<std::pair<int, Int>, MultTable> jh_;
};

// chi(W_loc(lambda+k delta)) = u^{a0 k} P(lambda)
CharElem local_weyl_character(const MacdonaldBasis& B, const FiniteWeight& lambda_dom,
                              Int shift_num);
// chi(W(lambda+k delta)) = u^{a0 k} P(lambda) / ||P(lambda)||^2 (closed form)
CharElem global_weyl_character(const MacdonaldBasis& B, const FiniteWeight& lambda_dom,
                               Int shift_num);
// chi(P(lambda+k delta)) = u^{a0 k} chi_lambda / S(q)
CharElem projective_character(const KernelSet& K, const FiniteWeight& lambda_dom, Int shift_num);

// Expansion of u^{a0 s} P(mu) into shifted irreducible characters by
// leading-term peeling; entries are Jordan-Holder multiplicities.
MultTable jordan_holder_multiplicities(BggEngine& E, const FiniteWeight& mu_dom, Int shift_num);

// Pairings <chi_lambda / S(q), P(mu)>_q read off as filtration
// multiplicities [P(lambda + k delta) : W(mu + s delta)]; mu ranges over
// the dominant weights with mu - lambda in Qbar^+ of root height at most
// range_bound.
MultTable weyl_filtration_multiplicities(BggEngine& E, const FiniteWeight& lambda_dom,
                                         Int shift_num, const Rat& range_bound);

struct ReciprocityEntry {
  FiniteWeight mu;
  int shift_num;  // total u-shift a0*s
  Int filtration;
  Int jordan_holder;
};

struct ReciprocityReport {
  FiniteWeight lambda;
  Int shift_num = 0;
  int trunc = 0;
  Rat range_bound;
  bool all_equal = true;
  Int compared = 0;                      // number of (mu, s) slots compared
  std::vector<ReciprocityEntry> entries; // slots where either side is nonzero, and mismatches
};

// Exhaustive enumeration bound for mu: truncation times the largest root
// height moved per u-order by any positive-level real root.
Rat default_range_bound(const AffineType& T, int trunc);

ReciprocityReport verify_reciprocity(BggEngine& E, const FiniteWeight& lambda_dom, Int shift_num,
                                     const Rat& range_bound);

// Convenience wrapper that builds the kernel and engine internally.
ReciprocityReport verify_reciprocity(const AffineType& T, const FiniteWeight& lambda_dom,
                                     const Rat& shift, int trunc,
                                     std::optional<Rat> range_bound = std::nullopt);

}  // namespace affchar
