#include "affchar/charring.hpp"

#include <algorithm>
#include <map>

#include "affchar/demazure.hpp"

namespace affchar {

void CharElem::add(const FiniteWeight& w, const QSeries& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
  symmetric_hint_ = false;
}

void CharElem::add_term(const FiniteWeight& w, int exp, const Rat& c) {
  if (c == 0 || exp > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(w, QSeries::zero(trunc_));
  it->second.add_term(exp, c);
  if (it->second.is_zero()) terms_.erase(it);
  symmetric_hint_ = false;
}

CharElem& CharElem::operator+=(const CharElem& o) {
  AFF_REQUIRE(type_ == o.type_, "type mismatch");
  trunc_ = std::min(trunc_, o.trunc_);
  bool sym = symmetric_hint_ && o.symmetric_hint_;
  for (const auto& [w, s] : o.terms_) add(w, s);
  symmetric_hint_ = sym;
  return *this;
}

CharElem& CharElem::operator-=(const CharElem& o) {
  AFF_REQUIRE(type_ == o.type_, "type mismatch");
  trunc_ = std::min(trunc_, o.trunc_);
  bool sym = symmetric_hint_ && o.symmetric_hint_;
  for (const auto& [w, s] : o.terms_) add(w, -s);
  symmetric_hint_ = sym;
  return *this;
}

CharElem operator+(const CharElem& a, const CharElem& b) {
  CharElem f = a;
  f += b;
  return f;
}

CharElem operator-(const CharElem& a, const CharElem& b) {
  CharElem f = a;
  f -= b;
  return f;
}

CharElem CharElem::scaled(const QSeries& s) const {
  CharElem f(*type_, std::min<int>(trunc_, s.trunc()));
  for (const auto& [w, v] : terms_) {
    QSeries p = v * s;
    if (!p.is_zero()) f.terms_.emplace(w, p.truncated(f.trunc_));
  }
  f.symmetric_hint_ = symmetric_hint_;
  return f;
}

CharElem CharElem::shifted(int uexp) const {
  CharElem f(*type_, trunc_ + uexp);
  for (const auto& [w, v] : terms_) f.terms_.emplace(w, v.shifted(uexp));
  f.symmetric_hint_ = symmetric_hint_;
  return f;
}

CharElem CharElem::truncated(int new_trunc) const {
  CharElem f(*type_, new_trunc);
  for (const auto& [w, v] : terms_) {
    QSeries s = v.truncated(new_trunc);
    if (!s.is_zero()) f.terms_.emplace(w, std::move(s));
  }
  f.symmetric_hint_ = symmetric_hint_;
  return f;
}

bool CharElem::equal_mod(const CharElem& o, int N) const {
  for (const auto& [w, s] : terms_)
    if (!s.equal_mod(o.coeff(w), N)) return false;
  for (const auto& [w, s] : o.terms_)
    if (terms_.find(w) == terms_.end() && !s.equal_mod(QSeries::zero(N), N)) return false;
  return true;
}

bool CharElem::dominates(const CharElem& o, int N) const {
  CharElem diff = *this;
  diff -= o;
  for (const auto& [w, s] : diff.terms())
    for (const auto& [e, c] : s.terms())
      if (e <= N && c < 0) return false;
  return true;
}

bool CharElem::is_weyl_invariant() const {
  if (symmetric_hint_) return true;
  for (const auto& [w, s] : terms_)
    for (int i = 1; i <= type_->n; ++i) {
      FiniteWeight v = finite_reflection(*type_, i, w);
      if (v == w) continue;
      auto it = terms_.find(v);
      if (it == terms_.end() || !(it->second == s)) return false;
    }
  return true;
}

std::vector<std::pair<FiniteWeight, QSeries>> CharElem::dominant_coefficients() const {
  std::vector<std::pair<FiniteWeight, QSeries>> out;
  for (const auto& [w, s] : terms_)
    if (is_dominant(w)) out.emplace_back(w, s);
  return out;
}

std::vector<FiniteWeight> CharElem::sorted_support() const {
  std::vector<FiniteWeight> ws;
  ws.reserve(terms_.size());
  for (const auto& [w, s] : terms_) ws.push_back(w);
  std::sort(ws.begin(), ws.end());
  return ws;
}

CharElem monomial(const AffineType& T, const FiniteWeight& lambda, int trunc) {
  CharElem f(T, trunc);
  for (const auto& w : weyl_orbit(T, dominant_rep(T, lambda)))
    f.add(w, QSeries::one(trunc));
  f.set_symmetric_hint(true);
  return f;
}

FiniteWeight iota_weight(const AffineType& T, const FiniteWeight& w) {
  FiniteWeight v(T.n);
  for (int i = 0; i < T.n; ++i) v.c[T.iota_perm[i]] = w.c[i];
  return v;
}

CharElem iota(const CharElem& f) {
  const AffineType& T = f.type();
  CharElem g(T, f.trunc());
  for (const auto& [w, s] : f.terms()) g.add(iota_weight(T, w), s);
  g.set_symmetric_hint(f.symmetric_hint());
  return g;
}

QSeries constant_term(const CharElem& f) { return f.coeff(FiniteWeight(f.type().n)); }

CharElem mul(const CharElem& f, const CharElem& g) {
  AFF_REQUIRE(&f.type() == &g.type(), "type mismatch");
  // weight support is the Minkowski sum; series multiply with the
  // truncation rule of QSeries
  int ftr = f.trunc(), gtr = g.trunc();
  int fmin = ftr + 1, gmin = gtr + 1;
  for (const auto& [w, s] : f.terms()) fmin = std::min(fmin, s.min_exp());
  for (const auto& [w, s] : g.terms()) gmin = std::min(gmin, s.min_exp());
  CharElem h(f.type(), std::min(ftr + gmin, gtr + fmin));
  const CharElem& outer = f.support_size() <= g.support_size() ? f : g;
  const CharElem& inner = f.support_size() <= g.support_size() ? g : f;
  for (const auto& [wa, sa] : outer.terms())
    for (const auto& [wb, sb] : inner.terms()) {
      QSeries p = (sa * sb).truncated(h.trunc());
      if (!p.is_zero()) h.add(wa + wb, p);
    }
  h.set_symmetric_hint(f.symmetric_hint() && g.symmetric_hint());
  return h;
}

CharElem irreducible_character_word(const AffineType& T, const FiniteWeight& lambda, int trunc,
                                    const std::vector<int>& word) {
  AFF_REQUIRE(is_dominant(lambda), "irreducible_character needs a dominant weight");
  std::unordered_map<FiniteWeight, Int, FWHash> f;
  f.emplace(lambda, 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    f = finite_demazure_op(T, *it, f);
  CharElem chi(T, trunc);
  for (const auto& [w, c] : f) chi.add_term(w, 0, Rat(c));
  chi.set_symmetric_hint(true);
  return chi;
}

CharElem irreducible_character(const AffineType& T, const FiniteWeight& lambda, int trunc) {
  return irreducible_character_word(T, lambda, trunc, T.wcirc_word);
}

std::vector<std::pair<FiniteWeight, Int>> dominant_weight_multiplicities(
    const AffineType& T, const FiniteWeight& lambda) {
  AFF_REQUIRE(is_dominant(lambda), "Freudenthal needs a dominant weight");
  auto below = dominants_below(T, lambda);  // ascending in root height of lambda - mu? descending
  // dominants_below sorts by descending root_height(lambda - mu): lambda first is false —
  // lambda is last; walk from lambda downward
  std::unordered_map<FiniteWeight, Int, FWHash> mult;
  mult.emplace(lambda, 1);

  FiniteWeight rho(T.n);
  for (int i = 0; i < T.n; ++i) rho.c[i] = 1;
  Rat norm_top = bilinear_finite(T, lambda + rho, lambda + rho);

  // process mu in increasing distance from lambda
  std::vector<FiniteWeight> order = below;
  std::sort(order.begin(), order.end(), [&](const FiniteWeight& a, const FiniteWeight& b) {
    Rat ha = root_height(T, lambda - a), hb = root_height(T, lambda - b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  for (const auto& mu : order) {
    if (mu == lambda) continue;
    Rat rhs = 0;
    for (size_t k = 0; k < T.rt_pos.size(); ++k) {
      const FiniteWeight& alpha = T.wt_pos[k];
      std::vector<Rat> alpha_rt(T.rt_pos[k].begin(), T.rt_pos[k].end());
      FiniteWeight v = mu;
      for (int step = 1;; ++step) {
        v = v + alpha;
        FiniteWeight vd = dominant_rep(T, v);
        if (!dominance_leq(T, vd, lambda)) break;
        auto it = mult.find(vd);
        if (it != mult.end() && it->second != 0)
          rhs += Rat(it->second) * form_weight_root(T, v, alpha_rt);
      }
    }
    Rat den = norm_top - bilinear_finite(T, mu + rho, mu + rho);
    AFF_ASSERT(den > 0, "Freudenthal denominator must be positive");
    Rat m = 2 * rhs / den;
    AFF_ASSERT(is_integer(m), "Freudenthal multiplicity must be integral");
    Int mi = to_int(m);
    if (mi != 0) mult.emplace(mu, mi);
  }

  std::vector<std::pair<FiniteWeight, Int>> out;
  out.reserve(mult.size());
  for (const auto& mu : order) {
    auto it = mult.find(mu);
    if (it != mult.end()) out.emplace_back(mu, it->second);
  }
  return out;
}

}  // namespace affchar
