#include "affchar/kernel.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace affchar {

namespace {

// prod over the factor list of (1 - u^uexp e^gamma), grouped per direction
CharElem char_product(const AffineType& T, int trunc,
                      const std::vector<std::pair<FiniteWeight, int>>& factors) {
  std::map<FiniteWeight, std::vector<int>> by_dir;
  for (const auto& [w, e] : factors) by_dir[w].push_back(e);

  CharElem acc = CharElem::unit(T, trunc);
  acc.set_symmetric_hint(true);
  for (const auto& [gamma, exps] : by_dir) {
    // collinear polynomial sum_m c_m(u) e^{m gamma}
    std::vector<QSeries> coef{QSeries::one(trunc)};
    for (int e : exps) {
      std::vector<QSeries> next(coef.size() + 1, QSeries::zero(trunc));
      for (size_t m = 0; m < coef.size(); ++m) {
        next[m] += coef[m];
        QSeries t = coef[m].shifted(e).truncated(trunc);
        if (!t.is_zero()) next[m + 1] -= t;
      }
      while (next.size() > 1 && next.back().is_zero()) next.pop_back();
      coef = std::move(next);
    }
    CharElem poly(T, trunc);
    FiniteWeight w(T.n);
    for (size_t m = 0; m < coef.size(); ++m) {
      if (!coef[m].is_zero()) poly.add(w, coef[m]);
      w = w + gamma;
    }
    acc = mul(acc, poly);
  }
  acc.set_symmetric_hint(true);  // the factor set is W-stable level by level
  return acc;
}

std::vector<std::pair<FiniteWeight, int>> nabla_factors(const AffineType& T, int trunc,
                                                        bool level_zero, bool positive_level) {
  std::vector<std::pair<FiniteWeight, int>> factors;
  Rat bound{trunc, T.a0};
  for (const auto& root : positive_real_roots(T, bound)) {
    Rat uexp = root.delta * T.a0;
    AFF_ASSERT(is_integer(uexp), "root level not on the u-grid");
    int e = static_cast<int>(to_int(uexp));
    if (e > trunc) continue;
    bool zero = (e == 0);
    if ((zero && !level_zero) || (!zero && !positive_level)) continue;
    FiniteWeight w = root_weight(T, root);
    factors.emplace_back(w, e);
    // the R'^- product contributes (1 - e^{-beta}) for each positive beta
    if (zero) factors.emplace_back(-w, 0);
  }
  return factors;
}

// 1/S for S = e^0 + (strictly positive u-order), order by order
CharElem char_invert_unit(const CharElem& S) {
  const AffineType& T = S.type();
  const int N = S.trunc();
  CharElem X = CharElem::unit(T, N) - S;
  for (const auto& [w, s] : X.terms())
    AFF_ASSERT(s.min_exp() >= 1, "series inversion needs unit constant term");
  CharElem inv = CharElem::unit(T, N);
  CharElem pow = X;
  while (!pow.empty()) {
    inv += pow;
    pow = mul(pow, X).truncated(N);
  }
  inv.set_symmetric_hint(S.symmetric_hint());
  return inv;
}

}  // namespace

const std::vector<FiniteWeight>& orbit_cached(const AffineType& T, const FiniteWeight& dom) {
  static std::mutex mu;
  static std::map<std::pair<std::string, FiniteWeight>, std::vector<FiniteWeight>> cache;
  std::lock_guard<std::mutex> lock{mu};
  auto key = std::make_pair(T.label, dom);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, weyl_orbit(T, dom)).first;
  return it->second;
}

CharElem build_nabla(const AffineType& T, int trunc) {
  return char_product(T, trunc, nabla_factors(T, trunc, true, true));
}

QSeries nabla_ct_closed_form(const AffineType& T, int trunc) {
  QSeries pf = QSeries::one(trunc);
  for (int i = 1; i < T.n; ++i)
    pf = pf * qs_product_pochhammer(T.a0 * T.r_node(i), trunc);
  pf = pf * qs_product_pochhammer(T.r_node(T.n), trunc);
  return qs_invert(pf).scaled(T.weyl_order);
}

KernelSet build_kernels(const AffineType& T, int trunc) {
  AFF_REQUIRE(trunc >= 1, "truncation order must be at least 1");
  KernelSet K;
  K.type = &T;
  K.trunc = trunc;

  QSeries pf = QSeries::one(trunc);
  for (int i = 1; i < T.n; ++i)
    pf = pf * qs_product_pochhammer(T.a0 * T.r_node(i), trunc);
  pf = pf * qs_product_pochhammer(T.r_node(T.n), trunc);
  K.pf = pf;
  K.nabla_ct = qs_invert(pf).scaled(T.weyl_order);

  CharElem level0 = char_product(T, trunc, nabla_factors(T, trunc, true, false));
  CharElem higher = char_product(T, trunc, nabla_factors(T, trunc, false, true));

  Rat winv{1, T.weyl_order};
  K.delta_inf_inf = level0.scaled(QSeries::monomial(winv, 0, trunc));
  K.delta_inf_inf.set_symmetric_hint(true);
  K.s_q = higher.scaled(pf);
  K.s_q.set_symmetric_hint(true);
  K.delta_q_inf = mul(level0, K.s_q).scaled(QSeries::monomial(winv, 0, trunc));
  K.delta_q_inf.set_symmetric_hint(true);
  K.s_q_inv = char_invert_unit(K.s_q);
  K.s_q_inv.set_symmetric_hint(true);
  return K;
}

namespace {

QSeries ct_pair_with(const CharElem& kernel, const AffineType& T, const FiniteWeight& a,
                     const FiniteWeight& b) {
  const auto& oa = orbit_cached(T, dominant_rep(T, a));
  const auto& ob = orbit_cached(T, dominant_rep(T, b));
  const bool sum_b = ob.size() <= oa.size();
  const auto& walk = sum_b ? ob : oa;
  const FiniteWeight& fixed = sum_b ? a : b;
  QSeries s(kernel.trunc());
  for (const auto& v : walk) s += kernel.coeff(-(fixed + v));
  return s.scaled(Rat(static_cast<Int>(sum_b ? oa.size() : ob.size())));
}

}  // namespace

QSeries ct_pair(const KernelSet& K, const FiniteWeight& a, const FiniteWeight& b) {
  return ct_pair_with(K.delta_q_inf, K.T(), a, b);
}

QSeries ct_pair_finite(const KernelSet& K, const FiniteWeight& a, const FiniteWeight& b) {
  return ct_pair_with(K.delta_inf_inf, K.T(), a, b);
}

namespace {

QSeries scalar_with(const CharElem& kernel, const CharElem& f, const CharElem& g,
                    const KernelSet& K) {
  AFF_REQUIRE(&f.type() == K.type && &g.type() == K.type, "type mismatch");
  AFF_REQUIRE(f.is_weyl_invariant(), "scalar product needs W-invariant arguments");
  AFF_REQUIRE(g.is_weyl_invariant(), "scalar product needs W-invariant arguments");
  const AffineType& T = K.T();
  int out_trunc = std::min({f.trunc(), g.trunc(), K.trunc});
  QSeries acc(out_trunc);
  for (const auto& [nu, fs] : f.dominant_coefficients()) {
    for (const auto& [sigma, gs] : g.dominant_coefficients()) {
      QSeries paired = ct_pair_with(kernel, T, nu, iota_weight(T, sigma));
      addmul(acc, fs * gs, paired);
    }
  }
  return acc;
}

}  // namespace

QSeries scalar_q(const CharElem& f, const CharElem& g, const KernelSet& K) {
  return scalar_with(K.delta_q_inf, f, g, K);
}

QSeries scalar_finite(const CharElem& f, const CharElem& g, const KernelSet& K) {
  return scalar_with(K.delta_inf_inf, f, g, K);
}

}  // namespace affchar
