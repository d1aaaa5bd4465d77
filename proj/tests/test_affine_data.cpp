#include <doctest.h>

#include <set>

#include "affchar/affine_data.hpp"
#include "affchar/weyl.hpp"

using namespace affchar;

namespace {
const char* kTestTypes[] = {"A1^(1)", "A2^(1)", "A3^(1)", "B2^(1)", "C2^(1)", "G2^(1)",
                            "A2^(2)", "A4^(2)", "A3^(2)", "D3^(2)", "D4^(3)"};
}

TEST_CASE("label parsing") {
  CHECK_NOTHROW(load_type("A1^(1)"));
  CHECK_NOTHROW(load_type("E6^(2)"));
  CHECK_NOTHROW(load_type("D4^(3)"));
  CHECK_THROWS_AS(load_type("H3^(1)"), std::invalid_argument);
  CHECK_THROWS_AS(load_type("A1^(2)"), std::invalid_argument);  // A_{2n-1}^(2) needs 2n-1 >= 3
  CHECK_THROWS_AS(load_type("A0^(1)"), std::invalid_argument);
  CHECK_THROWS_AS(load_type("D3^(1)"), std::invalid_argument);
  CHECK_THROWS_AS(load_type("A1^(3)"), std::invalid_argument);
  CHECK_THROWS_AS(load_type("A1"), std::invalid_argument);
  CHECK_THROWS_AS(load_type("A1^(1) "), std::invalid_argument);
}

TEST_CASE("A1^(1) datum") {
  const AffineType& T = load_type("A1^(1)");
  CHECK(T.marks == std::vector<Int>{1, 1});
  CHECK(T.comarks == std::vector<Int>{1, 1});
  CHECK(T.cartan == std::vector<std::vector<Int>>{{2, -2}, {-2, 2}});
}

TEST_CASE("A2^(2) marks and twist") {
  const AffineType& T = load_type("A2^(2)");
  CHECK(T.a0 == 2);
  CHECK(T.comarks[0] == 1);
  CHECK(T.r == 2);
  CHECK(T.marks == std::vector<Int>{2, 1});
}

TEST_CASE("null vectors and form symmetry for all test types") {
  for (const char* label : kTestTypes) {
    const AffineType& T = load_type(label);
    CAPTURE(label);
    for (int i = 0; i <= T.n; ++i) {
      Int row = 0, col = 0;
      for (int j = 0; j <= T.n; ++j) {
        row += T.cartan[i][j] * T.marks[j];
        col += T.cartan[j][i] * T.comarks[j];
      }
      CHECK(row == 0);
      CHECK(col == 0);
    }
    CHECK(T.comarks[0] == 1);
    for (int i = 0; i <= T.n; ++i)
      for (int j = 0; j <= T.n; ++j)
        CHECK(T.s[i] * T.cartan[i][j] == T.s[j] * T.cartan[j][i]);
    for (int i = 0; i <= T.n; ++i) CHECK(T.d[i] == Rat(T.marks[i]) / T.comarks[i]);
  }
}

TEST_CASE("bilinear form on the affine lattice") {
  for (const char* label : kTestTypes) {
    const AffineType& T = load_type(label);
    CAPTURE(label);
    AffineWeight delta{FiniteWeight(T.n), 0, T.a0};  // delta = (a0/a0) * delta
    AffineWeight lam0{FiniteWeight(T.n), 1, 0};
    CHECK(bilinear(T, delta, delta) == 0);
    CHECK(bilinear(T, delta, lam0) == 1);
    CHECK(bilinear(T, lam0, lam0) == 0);
  }
  const AffineType& A1 = load_type("A1^(1)");
  FiniteWeight alpha1{2};  // alpha_1 = 2*omega
  AffineWeight a1{alpha1, 0, 0};
  CHECK(bilinear(A1, a1, a1) == 2);
}

TEST_CASE("r_alpha") {
  const AffineType& A1 = load_type("A1^(1)");
  Root simple{{Rat(1)}, Rat(0), false};
  CHECK(r_alpha(A1, simple) == 1);

  const AffineType& A22 = load_type("A2^(2)");
  Root theta{{Rat(1)}, Rat(0), false};
  CHECK(root_len2(A22, theta) == 4);  // (theta,theta) = 2*a0
  CHECK(r_alpha(A22, theta) == 2);

  const AffineType& C2 = load_type("C2^(1)");
  Root short_root{{Rat(1), Rat(0)}, Rat(0), false};
  CHECK(root_len2(C2, short_root) == 1);  // untwisted short root with d = 2
  CHECK(r_alpha(C2, short_root) == 1);

  Root imag{{Rat(0)}, Rat(1), true};
  CHECK_THROWS_AS(r_alpha(A1, imag), std::invalid_argument);
}

TEST_CASE("theta is dominant with (theta,theta) = 2*a0") {
  for (const char* label : kTestTypes) {
    const AffineType& T = load_type(label);
    CAPTURE(label);
    Root theta{std::vector<Rat>(T.theta_rt.begin(), T.theta_rt.end()), Rat(0), false};
    CHECK(root_len2(T, theta) == 2 * T.a0);
    CHECK(is_dominant(T.theta_wt));
  }
}

TEST_CASE("positive real roots: examples") {
  const AffineType& A1 = load_type("A1^(1)");
  auto r0 = positive_real_roots(A1, 0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0].finite_rt == std::vector<Rat>{Rat(1)});

  auto r1 = positive_real_roots(A1, 1);
  REQUIRE(r1.size() == 3);
  CHECK(r1[1].finite_rt == std::vector<Rat>{Rat(-1)});
  CHECK(r1[1].delta == 1);
  CHECK(r1[2].finite_rt == std::vector<Rat>{Rat(1)});

  const AffineType& A22 = load_type("A2^(2)");
  auto rr = positive_real_roots(A22, Rat(1, 2));
  REQUIRE(rr.size() == 3);
  CHECK(rr[0].finite_rt == std::vector<Rat>{Rat(1)});
  CHECK(rr[0].delta == 0);
  CHECK(rr[1].finite_rt == std::vector<Rat>{Rat(-1, 2)});
  CHECK(rr[1].delta == Rat(1, 2));
  CHECK(rr[2].finite_rt == std::vector<Rat>{Rat(1, 2)});
}

TEST_CASE("positive real roots: level-0 count, length bound, lattice membership") {
  for (const char* label : kTestTypes) {
    const AffineType& T = load_type(label);
    CAPTURE(label);
    auto roots = positive_real_roots(T, 2);
    size_t level0 = 0;
    bool hit_max = false;
    for (const auto& root : roots) {
      if (root.delta == 0) ++level0;
      Rat len2 = root_len2(T, root);
      CHECK(len2 <= 2 * T.r);
      if (len2 == 2 * T.r) hit_max = true;
      // finite parts lie in Qbar: integer root coordinates except for
      // A_{2n}^(2) where half-integers occur
      for (const auto& c : root.finite_rt) {
        Rat scaled = T.is_a2n2() ? Rat(c * 2) : c;
        CHECK(is_integer(scaled));
      }
    }
    CHECK(level0 == T.rt_pos.size());
    CHECK(hit_max);
  }
}

TEST_CASE("positive real roots: enumeration is prefix-stable") {
  for (const char* label : {"A2^(2)", "A4^(2)", "G2^(1)", "D4^(3)"}) {
    const AffineType& T = load_type(label);
    auto a = positive_real_roots(T, Rat(3, 2));
    auto b = positive_real_roots(T, 3);
    REQUIRE(a.size() <= b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("root counts match the closure of the finite system") {
  struct Expect {
    const char* label;
    size_t pos_roots;
  };
  for (auto [label, count] : {Expect{"A3^(1)", 6}, Expect{"C2^(1)", 4}, Expect{"G2^(1)", 6},
                              Expect{"A4^(2)", 4}, Expect{"E6^(2)", 24}, Expect{"D4^(3)", 6}}) {
    CHECK(load_type(label).rt_pos.size() == count);
  }
}
