#include <doctest.h>

#include <random>

#include "affchar/weyl.hpp"

using namespace affchar;

TEST_CASE("simple reflections") {
  const AffineType& T = load_type("A1^(1)");
  AffineWeight lam{FiniteWeight{-1}, 1, 0};  // -omega + Lambda_0
  AffineWeight img = simple_reflection(T, 1, lam);
  CHECK(img.finite == FiniteWeight{1});
  CHECK(img.level == 1);
  CHECK(img.delta_num == 0);

  // fixed points and the involution property
  std::mt19937 rng{7};
  for (const char* label : {"A2^(2)", "C2^(1)", "D4^(3)", "A3^(1)"}) {
    const AffineType& S = load_type(label);
    std::uniform_int_distribution<int> coord(-3, 3);
    for (int trial = 0; trial < 25; ++trial) {
      AffineWeight x{FiniteWeight(S.n), coord(rng) % 2 + 1, coord(rng)};
      for (int i = 0; i < S.n; ++i) x.finite.c[i] = coord(rng);
      for (int i = 0; i <= S.n; ++i) {
        if (pairing(S, x, i) == 0) CHECK(simple_reflection(S, i, x) == x);
        CHECK(simple_reflection(S, i, simple_reflection(S, i, x)) == x);
      }
    }
  }
  CHECK_THROWS_AS(simple_reflection(T, 2, lam), std::invalid_argument);
}

TEST_CASE("bilinear form is W-equivariant") {
  std::mt19937 rng{11};
  for (const char* label : {"A2^(2)", "A4^(2)", "C2^(1)", "G2^(1)"}) {
    const AffineType& T = load_type(label);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
      AffineWeight x{FiniteWeight(T.n), coord(rng), coord(rng)};
      AffineWeight y{FiniteWeight(T.n), coord(rng), coord(rng)};
      for (int i = 0; i < T.n; ++i) {
        x.finite.c[i] = coord(rng);
        y.finite.c[i] = coord(rng);
      }
      for (int i = 0; i <= T.n; ++i)
        CHECK(bilinear(T, simple_reflection(T, i, x), simple_reflection(T, i, y)) ==
              bilinear(T, x, y));
    }
  }
}

TEST_CASE("weyl orbits") {
  const AffineType& A1 = load_type("A1^(1)");
  CHECK(weyl_orbit(A1, FiniteWeight{0}).size() == 1);
  auto orb = weyl_orbit(A1, FiniteWeight{1});
  REQUIRE(orb.size() == 2);
  CHECK(orb[0] == FiniteWeight{-1});
  CHECK(orb[1] == FiniteWeight{1});

  const AffineType& C2 = load_type("C2^(1)");
  CHECK(weyl_orbit(C2, FiniteWeight{1, 0}).size() == 4);

  // exactly one dominant and one anti-dominant element per orbit
  for (const char* label : {"A2^(1)", "G2^(1)", "A4^(2)"}) {
    const AffineType& T = load_type(label);
    FiniteWeight w(T.n);
    w.c[0] = 2;
    if (T.n > 1) w.c[1] = 1;
    int doms = 0, antidoms = 0;
    for (const auto& v : weyl_orbit(T, w)) {
      doms += is_dominant(v);
      antidoms += is_antidominant(v);
    }
    CHECK(doms == 1);
    CHECK(antidoms == 1);
    CHECK(weyl_orbit(T, w).size() % 1 == 0);
  }
}

TEST_CASE("w_circ") {
  const AffineType& A1 = load_type("A1^(1)");
  CHECK(w_circ(A1, FiniteWeight{3}) == FiniteWeight{-3});
  CHECK(w_circ(A1, FiniteWeight{0}) == FiniteWeight{0});

  const AffineType& A2 = load_type("A2^(1)");
  CHECK(w_circ(A2, FiniteWeight{1, 0}) == FiniteWeight{0, -1});
}

TEST_CASE("dominants_below") {
  const AffineType& A1 = load_type("A1^(1)");
  auto below = dominants_below(A1, FiniteWeight{2});
  REQUIRE(below.size() == 2);
  CHECK(below[0] == FiniteWeight{0});
  CHECK(below[1] == FiniteWeight{2});

  CHECK(dominants_below(A1, FiniteWeight{0}) == std::vector<FiniteWeight>{FiniteWeight{0}});

  // Qbar for A2^(2) contains omega = alpha_1/2
  const AffineType& A22 = load_type("A2^(2)");
  auto b22 = dominants_below(A22, FiniteWeight{1});
  REQUIRE(b22.size() == 2);
  CHECK(b22[0] == FiniteWeight{0});
  CHECK(b22[1] == FiniteWeight{1});

  CHECK_THROWS_AS(dominants_below(A1, FiniteWeight{-1}), std::invalid_argument);

  // downward closure
  for (const char* label : {"C2^(1)", "A4^(2)", "D4^(3)"}) {
    const AffineType& T = load_type(label);
    FiniteWeight top(T.n);
    top.c[0] = 1;
    top.c[1] = 2;
    auto list = dominants_below(T, top);
    for (const auto& mu : list)
      for (const auto& nu : list)
        if (dominance_leq(T, nu, mu)) {
          bool found = false;
          for (const auto& x : list) found = found || (x == nu);
          CHECK(found);
        }
    CHECK(list.back() == top);
  }
}

TEST_CASE("to_dominant") {
  const AffineType& A1 = load_type("A1^(1)");

  auto [d1, w1] = to_dominant(A1, AffineWeight{FiniteWeight{-1}, 1, 0});
  CHECK(d1 == AffineWeight{FiniteWeight{1}, 1, 0});
  CHECK(w1 == std::vector<int>{1});

  AffineWeight dom{FiniteWeight{1}, 1, 0};
  auto [d2, w2] = to_dominant(A1, dom);
  CHECK(d2 == dom);
  CHECK(w2.empty());

  // Lambda = s_0 s_1 (omega + Lambda_0) recovers the word [0, 1]
  AffineWeight lam = simple_reflection(A1, 0, simple_reflection(A1, 1, dom));
  auto [d3, w3] = to_dominant(A1, lam);
  CHECK(d3 == dom);
  CHECK(w3 == std::vector<int>{0, 1});

  CHECK_THROWS_AS(to_dominant(A1, AffineWeight{FiniteWeight{1}, 0, 0}), std::invalid_argument);

  // the word applied to the dominant representative recovers the input
  std::mt19937 rng{23};
  for (const char* label : {"A2^(2)", "A4^(2)", "C2^(1)", "D4^(3)", "A2^(1)"}) {
    const AffineType& T = load_type(label);
    std::uniform_int_distribution<int> coord(-3, 2);
    for (int trial = 0; trial < 15; ++trial) {
      AffineWeight x{FiniteWeight(T.n), 1, 0};
      for (int i = 0; i < T.n; ++i) x.finite.c[i] = coord(rng);
      auto [d, word] = to_dominant(T, x);
      for (int i = 0; i <= T.n; ++i) CHECK(pairing(T, d, i) >= 0);
      AffineWeight back = d;
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        back = simple_reflection(T, *it, back);
      CHECK(back == x);
    }
  }
}

TEST_CASE("to_dominant word length counts inverted positive real roots") {
  // |word| = #{alpha in R^{re,+} : (Lambda, alpha^vee) < 0} at level one
  std::mt19937 rng{31};
  for (const char* label : {"A1^(1)", "A2^(2)", "C2^(1)"}) {
    const AffineType& T = load_type(label);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
      AffineWeight x{FiniteWeight(T.n), 1, 0};
      for (int i = 0; i < T.n; ++i) x.finite.c[i] = coord(rng);
      auto [d, word] = to_dominant(T, x);

      // pairing (x, alpha^vee) = 2 (x,alpha)/(alpha,alpha) can only be
      // negative while the level contribution stays small
      Rat max_finite = 0;
      for (const auto& root : positive_real_roots(T, 0)) {
        AffineWeight fin{root_weight(T, root), 0, 0};
        Rat v = bilinear(T, x, fin);
        if (v < 0) v = -v;
        max_finite = std::max(max_finite, v);
      }
      Rat bound = max_finite + 2;
      size_t inversions = 0;
      for (const auto& root : positive_real_roots(T, bound)) {
        AffineWeight rw{root_weight(T, root), 0, 0};
        rw.delta_num = to_int(root.delta * T.a0);
        Rat num = 2 * bilinear(T, x, rw);
        if (num / root_len2(T, root) < 0) ++inversions;
      }
      CHECK(word.size() == inversions);
    }
  }
}
