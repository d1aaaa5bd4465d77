#include "affchar/demazure.hpp"

#include <algorithm>

#include "affchar/macdonald.hpp"

namespace affchar {

AffCharElem demazure_op(const AffineType& T, int i, const AffCharElem& f) {
  AFF_REQUIRE(i >= 0 && i <= T.n, "node out of range");
  AffCharElem g(T, f.level());

  // alpha_i as (finite move in the weight basis, delta numerator move);
  // for i = 0 the finite part is -theta/a0.
  FiniteWeight step(T.n);
  Int step_dnum = 0;
  if (i >= 1) {
    for (int j = 0; j < T.n; ++j) step.c[j] = static_cast<int32_t>(T.cartan[j + 1][i]);
  } else {
    for (int j = 0; j < T.n; ++j) {
      Int num = -Int{T.theta_wt.c[j]};
      AFF_ASSERT(num % T.a0 == 0, "alpha_0 finite part not integral");
      step.c[j] = static_cast<int32_t>(num / T.a0);
    }
    step_dnum = 1;
  }

  for (const auto& [key, cnt] : f.terms()) {
    Int k;
    if (i >= 1) {
      k = key.fw.c[i - 1];
    } else {
      k = f.level();
      for (int j = 1; j <= T.n; ++j) k -= T.comarks[j] * key.fw.c[j - 1];
    }
    if (k >= 0) {
      FiniteWeight w = key.fw;
      Int dn = key.delta_num;
      for (Int j = 0; j <= k; ++j) {
        g.add(w, dn, cnt);
        w = w - step;
        dn -= step_dnum;
      }
    } else if (k <= -2) {
      FiniteWeight w = key.fw + step;
      Int dn = key.delta_num + step_dnum;
      for (Int j = 1; j <= -k - 1; ++j) {
        g.add(w, dn, -cnt);
        w = w + step;
        dn += step_dnum;
      }
    }
    // k == -1 contributes nothing
  }
  return g;
}

std::unordered_map<FiniteWeight, Int, FWHash> finite_demazure_op(
    const AffineType& T, int i, const std::unordered_map<FiniteWeight, Int, FWHash>& f) {
  AFF_REQUIRE(i >= 1 && i <= T.n, "node out of range");
  FiniteWeight step(T.n);
  for (int j = 0; j < T.n; ++j) step.c[j] = static_cast<int32_t>(T.cartan[j + 1][i]);

  std::unordered_map<FiniteWeight, Int, FWHash> g;
  auto add = [&](const FiniteWeight& w, Int c) {
    auto [it, inserted] = g.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) g.erase(it);
    }
  };
  for (const auto& [wt, cnt] : f) {
    Int k = wt.c[i - 1];
    if (k >= 0) {
      FiniteWeight w = wt;
      for (Int j = 0; j <= k; ++j, w = w - step) add(w, cnt);
    } else if (k <= -2) {
      FiniteWeight w = wt + step;
      for (Int j = 1; j <= -k - 1; ++j, w = w + step) add(w, -cnt);
    }
  }
  return g;
}

CharElem demazure_character(const AffineType& T, const FiniteWeight& lambda, int trunc) {
  AFF_REQUIRE(lambda.rank() == T.n, "rank mismatch");
  AffineWeight top{lambda, 1, 0};
  auto [dom, word] = to_dominant(T, top);

  AffCharElem f(T, 1);
  AFF_ASSERT(dom.level == 1, "level must be preserved");
  f.add(dom.finite, dom.delta_num, 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_op(T, *it, f);

  // the extreme weight e^{lambda + Lambda_0} pins the u-power normalization
  bool found = false;
  Int e0 = 0;
  for (const auto& [key, cnt] : f.terms()) {
    if (!(key.fw == lambda)) continue;
    if (!found || key.delta_num < e0) {
      e0 = key.delta_num;
      found = true;
    }
  }
  AFF_ASSERT(found, "extreme weight missing from the Demazure character");

  CharElem out(T, trunc);
  for (const auto& [key, cnt] : f.terms()) {
    Int e = key.delta_num - e0;
    AFF_ASSERT(e >= INT32_MIN && e <= INT32_MAX, "u-exponent overflow");
    if (e <= trunc) out.add_term(key.fw, static_cast<int>(e), Rat(cnt));
  }
  return out;
}

DemazureComparison compare_demazure_macdonald(const MacdonaldBasis& basis,
                                              const FiniteWeight& lambda_dom) {
  const AffineType& T = basis.type();
  AFF_REQUIRE(is_dominant(lambda_dom), "needs a dominant weight");
  const int N = basis.trunc();
  CharElem P = basis.poly(lambda_dom);
  CharElem D = demazure_character(T, w_circ(T, lambda_dom), N);

  DemazureComparison rep;
  rep.type_one = T.type_one;
  rep.difference = P - D;
  rep.equal = P.equal_mod(D, N);
  rep.dominates = P.dominates(D, N);
  rep.strict = false;
  for (const auto& [w, s] : rep.difference.terms())
    for (const auto& [e, c] : s.terms())
      if (e <= N && c > 0) rep.strict = true;
  if (T.type_one && !rep.equal)
    throw std::logic_error{"type I Demazure/Macdonald mismatch at weight " + lambda_dom.str()};
  if (!T.type_one && !rep.dominates)
    throw std::logic_error{"type II domination failure at weight " + lambda_dom.str()};
  return rep;
}

}  // namespace affchar
