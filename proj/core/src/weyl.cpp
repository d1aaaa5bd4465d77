#include "affchar/weyl.hpp"

#include <algorithm>
#include <unordered_set>

namespace affchar {

Int pairing(const AffineType& T, const AffineWeight& x, int i) {
  AFF_REQUIRE(i >= 0 && i <= T.n, "node out of range");
  if (i >= 1) return x.finite.c[i - 1];
  // alpha_0^vee = K - sum_{i>=1} a_i^vee alpha_i^vee; Lambda_0(K) = 1, delta(K) = 0
  Int v = x.level;
  for (int j = 1; j <= T.n; ++j) v -= T.comarks[j] * x.finite.c[j - 1];
  return v;
}

AffineWeight simple_reflection(const AffineType& T, int i, const AffineWeight& x) {
  AFF_REQUIRE(i >= 0 && i <= T.n, "node out of range");
  Int k = pairing(T, x, i);
  AffineWeight y = x;
  if (k == 0) return y;
  if (i >= 1) {
    for (int j = 0; j < T.n; ++j)
      y.finite.c[j] = static_cast<int32_t>(y.finite.c[j] - k * T.cartan[j + 1][i]);
    return y;
  }
  // alpha_0 = (delta - theta)/a0; its finite part -theta/a0 stays integral.
  for (int j = 0; j < T.n; ++j) {
    Int num = Int{k} * T.theta_wt.c[j];
    AFF_ASSERT(num % T.a0 == 0, "alpha_0 finite part not integral");
    y.finite.c[j] = static_cast<int32_t>(y.finite.c[j] + num / T.a0);
  }
  y.delta_num -= k;  // delta coefficient moves by -k/a0
  return y;
}

FiniteWeight finite_reflection(const AffineType& T, int i, const FiniteWeight& x) {
  AFF_REQUIRE(i >= 1 && i <= T.n, "node out of range");
  FiniteWeight y = x;
  int32_t k = x.c[i - 1];
  if (k == 0) return y;
  for (int j = 0; j < T.n; ++j)
    y.c[j] = static_cast<int32_t>(y.c[j] - Int{k} * T.cartan[j + 1][i]);
  return y;
}

bool is_dominant(const FiniteWeight& x) {
  for (int i = 0; i < x.rank(); ++i)
    if (x.c[i] < 0) return false;
  return true;
}

bool is_antidominant(const FiniteWeight& x) {
  for (int i = 0; i < x.rank(); ++i)
    if (x.c[i] > 0) return false;
  return true;
}

std::vector<FiniteWeight> weyl_orbit(const AffineType& T, const FiniteWeight& x) {
  std::unordered_set<FiniteWeight, FWHash> seen;
  std::vector<FiniteWeight> queue{x}, out;
  seen.insert(x);
  while (!queue.empty()) {
    FiniteWeight v = queue.back();
    queue.pop_back();
    out.push_back(v);
    for (int i = 1; i <= T.n; ++i) {
      FiniteWeight w = finite_reflection(T, i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteWeight w_circ(const AffineType& T, const FiniteWeight& x) {
  FiniteWeight v = x;
  for (;;) {
    int i = 0;
    for (int j = 0; j < T.n; ++j)
      if (v.c[j] > 0) {
        i = j + 1;
        break;
      }
    if (i == 0) return v;
    v = finite_reflection(T, i, v);
  }
}

FiniteWeight dominant_rep(const AffineType& T, const FiniteWeight& x) {
  FiniteWeight v = x;
  for (;;) {
    int i = 0;
    for (int j = 0; j < T.n; ++j)
      if (v.c[j] < 0) {
        i = j + 1;
        break;
      }
    if (i == 0) return v;
    v = finite_reflection(T, i, v);
  }
}

std::vector<Rat> root_coords(const AffineType& T, const FiniteWeight& x) {
  std::vector<Rat> out(T.n, 0);
  for (int i = 0; i < T.n; ++i)
    for (int j = 0; j < T.n; ++j)
      if (x.c[j] != 0) out[i] += T.inv_cartan[i][j] * x.c[j];
  return out;
}

Rat root_height(const AffineType& T, const FiniteWeight& x) {
  Rat h = 0;
  for (auto& v : root_coords(T, x)) h += v;
  return h;
}

bool in_qbar_plus(const AffineType& T, const FiniteWeight& x) {
  // Qbar = Q' except for A_{2n}^(2), where half-integer root coordinates
  // are admitted (Qbar is index two over Q').
  for (auto& v : root_coords(T, x)) {
    if (v < 0) return false;
    Rat scaled = T.is_a2n2() ? Rat(v * 2) : v;
    if (!is_integer(scaled)) return false;
  }
  return true;
}

bool dominance_leq(const AffineType& T, const FiniteWeight& mu, const FiniteWeight& lambda) {
  return in_qbar_plus(T, lambda - mu);
}

std::vector<FiniteWeight> dominants_below(const AffineType& T, const FiniteWeight& lambda) {
  AFF_REQUIRE(is_dominant(lambda), "dominants_below needs a dominant weight");
  AFF_REQUIRE(lambda.rank() == T.n, "rank mismatch");
  // per-coordinate bound: root coords of lambda - w_circ(lambda)
  auto span = root_coords(T, lambda - w_circ(T, lambda));
  int denom = T.is_a2n2() ? 2 : 1;
  std::vector<Int> bounds(T.n);
  for (int i = 0; i < T.n; ++i) {
    Rat b = span[i] * denom;
    AFF_ASSERT(is_integer(b), "dominance span not in the coordinate grid");
    bounds[i] = to_int(b);
  }

  std::vector<FiniteWeight> out;
  // enumerate c-grids directly (simple nested counter)
  std::vector<Int> c(T.n, 0);
  for (;;) {
    // mu = lambda - sum (c_i/denom) alpha_i
    FiniteWeight mu(T.n);
    bool ok = true;
    for (int j = 0; j < T.n && ok; ++j) {
      Int num = Int{lambda.c[j]} * denom;
      for (int i = 0; i < T.n; ++i) num -= c[i] * T.cartan[j + 1][i + 1];
      if (num % denom != 0 || num / denom < 0)
        ok = false;
      else
        mu.c[j] = static_cast<int32_t>(num / denom);
    }
    if (ok) out.push_back(mu);
    int k = 0;
    while (k < T.n && c[k] == bounds[k]) c[k++] = 0;
    if (k == T.n) break;
    ++c[k];
  }

  std::sort(out.begin(), out.end(), [&](const FiniteWeight& a, const FiniteWeight& b) {
    Rat ha = root_height(T, lambda - a), hb = root_height(T, lambda - b);
    if (ha != hb) return ha > hb;
    return a < b;
  });
  return out;
}

std::vector<FiniteWeight> dominants_above(const AffineType& T, const FiniteWeight& base,
                                          const Rat& height_bound) {
  AFF_REQUIRE(base.rank() == T.n, "rank mismatch");
  int denom = T.is_a2n2() ? 2 : 1;
  Rat hb = height_bound * denom;
  Int hmax = hb < 0 ? -1 : to_int(Rat(hb.get_num() / hb.get_den()));

  std::vector<FiniteWeight> out;
  std::vector<Int> c(T.n, 0);
  for (;;) {
    Int total = 0;
    for (int i = 0; i < T.n; ++i) total += c[i];
    if (total <= hmax) {
      FiniteWeight mu(T.n);
      bool ok = true;
      for (int j = 0; j < T.n && ok; ++j) {
        Int num = Int{base.c[j]} * denom;
        for (int i = 0; i < T.n; ++i) num += c[i] * T.cartan[j + 1][i + 1];
        if (num % denom != 0 || num / denom < 0)
          ok = false;
        else {
          AFF_REQUIRE(num / denom <= INT32_MAX, "coordinate overflow");
          mu.c[j] = static_cast<int32_t>(num / denom);
        }
      }
      if (ok) out.push_back(mu);
    }
    int k = 0;
    while (k < T.n && c[k] >= hmax) c[k++] = 0;
    if (k == T.n) break;
    ++c[k];
  }
  std::sort(out.begin(), out.end(), [&](const FiniteWeight& a, const FiniteWeight& b) {
    Rat ha = root_height(T, a), hb2 = root_height(T, b);
    if (ha != hb2) return ha < hb2;
    return a < b;
  });
  return out;
}

std::pair<AffineWeight, std::vector<int>> to_dominant(const AffineType& T, const AffineWeight& x) {
  AFF_REQUIRE(x.level >= 1, "to_dominant needs positive level");
  AffineWeight v = x;
  std::vector<int> word;
  for (;;) {
    int i = -1;
    for (int j = 0; j <= T.n; ++j)
      if (pairing(T, v, j) < 0) {
        i = j;
        break;
      }
    if (i < 0) break;
    v = simple_reflection(T, i, v);
    word.push_back(i);
  }
  return {v, word};
}

}  // namespace affchar
