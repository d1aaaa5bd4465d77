#include "affchar/bgg.hpp"

#include <algorithm>

namespace affchar {

BggEngine::BggEngine(const KernelSet& K, const std::vector<FiniteWeight>& region_targets)
    : K_(&K), basis_(macdonald_basis_set(region_targets, K)) {
  for (auto& [w, s] : K.s_q_inv.dominant_coefficients()) sinv_dom_.emplace_back(w, s);
  std::sort(sinv_dom_.begin(), sinv_dom_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

const std::vector<std::pair<int, Int>>& BggEngine::kostka_column(int idx) {
  auto it = kostka_.find(idx);
  if (it == kostka_.end()) {
    const FiniteWeight& nu = basis_.order[static_cast<size_t>(idx)];
    std::vector<std::pair<int, Int>> col;
    for (const auto& [w, m] : dominant_weight_multiplicities(type(), nu))
      col.emplace_back(basis_.index_of(w), m);
    std::sort(col.begin(), col.end());
    it = kostka_.emplace(idx, std::move(col)).first;
  }
  return it->second;
}

const CharElem& BggEngine::chi(const FiniteWeight& lambda_dom) {
  auto it = chi_.find(lambda_dom);
  if (it == chi_.end())
    it = chi_.emplace(lambda_dom, irreducible_character(type(), lambda_dom, trunc())).first;
  return it->second;
}

const QSeries& BggEngine::gs_value(const FiniteWeight& sigma) {
  auto it = gs_.find(sigma);
  if (it == gs_.end()) {
    QSeries acc(trunc());
    for (const auto& [nu, coef] : sinv_dom_) addmul(acc, coef, ct_pair(*K_, sigma, nu));
    it = gs_.emplace(sigma, std::move(acc)).first;
  }
  return it->second;
}

CharElem local_weyl_character(const MacdonaldBasis& B, const FiniteWeight& lambda_dom,
                              Int shift_num) {
  AFF_REQUIRE(shift_num <= B.trunc(), "grading shift exceeds the truncation order");
  return B.poly(lambda_dom).shifted(static_cast<int>(shift_num)).truncated(B.trunc());
}

CharElem global_weyl_character(const MacdonaldBasis& B, const FiniteWeight& lambda_dom,
                               Int shift_num) {
  QSeries inv_norm = qs_invert(norm_closed_form(B.type(), lambda_dom, B.trunc()));
  return B.poly(lambda_dom)
      .scaled(inv_norm)
      .shifted(static_cast<int>(shift_num))
      .truncated(B.trunc());
}

CharElem projective_character(const KernelSet& K, const FiniteWeight& lambda_dom, Int shift_num) {
  CharElem chi = irreducible_character(K.T(), lambda_dom, K.trunc);
  return mul(chi, K.s_q_inv).shifted(static_cast<int>(shift_num)).truncated(K.trunc);
}

MultTable jordan_holder_multiplicities(BggEngine& E, const FiniteWeight& mu_dom, Int shift_num) {
  const MacdonaldBasis& B = E.basis();
  const int idx = B.index_of(mu_dom);

  // u^{a0 s} P(mu) in monomial coordinates, exact integer series
  std::map<int, IntSeries> v;
  for (const auto& [j, coef] : B.mcoord[static_cast<size_t>(idx)]) {
    IntSeries shifted;
    shifted.reserve(coef.size());
    for (const auto& [e, c] : coef)
      shifted.emplace_back(static_cast<int32_t>(e + shift_num), c);
    v.emplace(j, std::move(shifted));
  }

  MultTable table;
  table.source = MultTable::Source::jordan_holder;
  while (!v.empty()) {
    // dominance-maximal surviving weight: maximal scaled root height wins
    int best = -1;
    Int best_ht = 0;
    for (const auto& [j, coef] : v) {
      if (coef.empty()) continue;
      Int ht = B.ht_scaled[static_cast<size_t>(j)];
      if (best < 0 || ht > best_ht || (ht == best_ht && j > best)) {
        best = j;
        best_ht = ht;
      }
    }
    if (best < 0) break;
    IntSeries lead = v[best];
    v.erase(best);
    for (const auto& [e, c] : lead) {
      AFF_ASSERT(c > 0, "negative coefficient during Jordan-Holder peeling at weight " +
                            B.order[static_cast<size_t>(best)].str());
      table.set(B.order[static_cast<size_t>(best)], e, c);
    }
    for (const auto& [j, m] : E.kostka_column(best)) {
      if (j == best) continue;  // the diagonal entry was removed with the lead
      auto [it, inserted] = v.try_emplace(j);
      int_add_scaled(it->second, lead, -m, 0);
      if (it->second.empty()) v.erase(it);
    }
  }
  return table;
}

MultTable weyl_filtration_multiplicities(BggEngine& E, const FiniteWeight& lambda_dom,
                                         Int shift_num, const Rat& range_bound) {
  const AffineType& T = E.type();
  const MacdonaldBasis& B = E.basis();
  const int N = E.trunc();
  const CharElem& chi = E.chi(lambda_dom);

  std::unordered_map<int, QSeries> vcache;
  auto vval = [&](int rho) -> const QSeries& {
    auto it = vcache.find(rho);
    if (it == vcache.end()) {
      // [chi_lambda m_{rho*} s_inv Delta] via the invariant decomposition
      CharElem t = mul(chi, monomial(T, iota_weight(T, B.order[static_cast<size_t>(rho)]), N));
      QSeries acc(N);
      for (const auto& [sigma, ts] : t.dominant_coefficients())
        addmul(acc, ts, E.gs_value(sigma));
      it = vcache.emplace(rho, std::move(acc)).first;
    }
    return it->second;
  };

  MultTable table;
  table.source = MultTable::Source::weyl_filtration;
  for (const auto& mu : dominants_above(T, lambda_dom, range_bound)) {
    const int idx = B.index_of(mu);
    QSeries pairing(N);
    for (const auto& [rho, coef] : B.mcoord[static_cast<size_t>(idx)])
      addmul_int(pairing, coef, vval(rho));
    for (const auto& [e, c] : pairing.terms()) {
      AFF_ASSERT(is_integer(c) && c > 0,
                 "filtration pairing produced a non-integer or negative coefficient at weight " +
                     mu.str());
      table.set(mu, static_cast<int>(e + shift_num), to_int(c));
    }
  }
  return table;
}

Rat default_range_bound(const AffineType& T, int trunc) {
  Rat rate = 0;
  for (const auto& root : positive_real_roots(T, Rat(std::max(T.r, 2)))) {
    if (root.delta == 0) continue;
    Rat drop = 0;
    for (const auto& c : root.finite_rt) drop -= c;
    if (drop <= 0) continue;
    Rat uexp = root.delta * T.a0;
    Rat r = drop / uexp;
    rate = std::max(rate, r);
  }
  return rate * trunc;
}

ReciprocityReport verify_reciprocity(BggEngine& E, const FiniteWeight& lambda_dom, Int shift_num,
                                     const Rat& range_bound) {
  const AffineType& T = E.type();
  const int N = E.trunc();

  ReciprocityReport rep;
  rep.lambda = lambda_dom;
  rep.shift_num = shift_num;
  rep.trunc = N;
  rep.range_bound = range_bound;

  MultTable filt = weyl_filtration_multiplicities(E, lambda_dom, shift_num, range_bound);

  // [P(lambda+k delta) : W(mu+s delta)] against [W_loc(mu+k delta) : V(lambda+s delta)]:
  // the Jordan-Holder table of mu at shift k, read in its lambda column at s.
  for (const auto& mu : dominants_above(T, lambda_dom, range_bound)) {
    const MultTable& jh = E.jordan_holder(mu, shift_num);
    for (Int x = shift_num; x <= N + shift_num; ++x) {
      Int a = filt.at(mu, static_cast<int>(x));
      Int b = jh.at(lambda_dom, static_cast<int>(x));
      ++rep.compared;
      if (a != b) rep.all_equal = false;
      if (a != 0 || b != 0 || a != b)
        rep.entries.push_back({mu, static_cast<int>(x), a, b});
    }
  }
  return rep;
}

const MultTable& BggEngine::jordan_holder(const FiniteWeight& mu_dom, Int shift_num) {
  auto key = std::make_pair(basis_.index_of(mu_dom), shift_num);
  auto it = jh_.find(key);
  if (it == jh_.end())
    it = jh_.emplace(key, jordan_holder_multiplicities(*this, mu_dom, shift_num)).first;
  return it->second;
}

ReciprocityReport verify_reciprocity(const AffineType& T, const FiniteWeight& lambda_dom,
                                     const Rat& shift, int trunc, std::optional<Rat> range_bound) {
  Rat shift_scaled = shift * T.a0;
  AFF_REQUIRE(is_integer(shift_scaled), "shift must lie in (1/a0)Z");
  Rat bound = range_bound ? *range_bound : default_range_bound(T, trunc);
  KernelSet K = build_kernels(T, trunc);
  BggEngine E(K, dominants_above(T, lambda_dom, bound));
  return verify_reciprocity(E, lambda_dom, to_int(shift_scaled), bound);
}

}  // namespace affchar
