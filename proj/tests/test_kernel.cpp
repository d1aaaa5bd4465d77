#include <doctest.h>

#include <random>

#include "affchar/kernel.hpp"

using namespace affchar;

namespace {
const char* kTestTypes[] = {"A1^(1)", "A2^(1)", "A3^(1)", "B2^(1)", "C2^(1)", "G2^(1)",
                            "A2^(2)", "A4^(2)", "A3^(2)", "D3^(2)", "D4^(3)"};
}

TEST_CASE("constant term of the Macdonald kernel is one") {
  for (const char* label : kTestTypes) {
    const AffineType& T = load_type(label);
    CAPTURE(label);
    KernelSet K = build_kernels(T, 8);
    CHECK(constant_term(K.delta_q_inf).equal_mod(QSeries::one(8), 8));
    CHECK(constant_term(K.delta_inf_inf).equal_mod(QSeries::one(8), 8));
  }
}

TEST_CASE("closed-form nabla constant term matches the brute-force expansion") {
  for (const char* label : {"A1^(1)", "A2^(1)", "C2^(1)", "A2^(2)", "A4^(2)", "D4^(3)"}) {
    const AffineType& T = load_type(label);
    CAPTURE(label);
    CHECK(constant_term(build_nabla(T, 6)).equal_mod(nabla_ct_closed_form(T, 6), 6));
  }
}

TEST_CASE("A1^(1) closed form instantiates to 2/poch(1)") {
  const AffineType& T = load_type("A1^(1)");
  QSeries expect = qs_invert(qs_product_pochhammer(1, 10)).scaled(2);
  CHECK(nabla_ct_closed_form(T, 10).equal_mod(expect, 10));
}

TEST_CASE("u^0 slice of Delta(q,inf) is Delta(inf,inf)") {
  for (const char* label : {"A2^(1)", "C2^(1)", "A2^(2)", "A4^(2)"}) {
    const AffineType& T = load_type(label);
    KernelSet K = build_kernels(T, 6);
    CharElem slice(T, 6);
    for (const auto& [w, s] : K.delta_q_inf.terms()) slice.add_term(w, 0, s.coeff(0));
    CHECK(slice.equal_mod(K.delta_inf_inf, 0));
  }
}

TEST_CASE("kernel invariances") {
  for (const char* label : {"A2^(1)", "A2^(2)", "C2^(1)"}) {
    const AffineType& T = load_type(label);
    KernelSet K = build_kernels(T, 6);
    CHECK(K.delta_q_inf.is_weyl_invariant());
    CHECK(iota(K.delta_q_inf).equal_mod(K.delta_q_inf, 6));
    CHECK(mul(K.s_q, K.s_q_inv).equal_mod(CharElem::unit(T, 6), 6));
  }
}

TEST_CASE("truncation stability of the kernels") {
  for (const char* label : {"A1^(1)", "A2^(2)", "C2^(1)"}) {
    const AffineType& T = load_type(label);
    KernelSet narrow = build_kernels(T, 6);
    KernelSet wide = build_kernels(T, 10);
    CHECK(wide.delta_q_inf.truncated(6).equal_mod(narrow.delta_q_inf, 6));
    CHECK(wide.s_q_inv.truncated(6).equal_mod(narrow.s_q_inv, 6));
    CHECK(wide.nabla_ct.truncated(6).equal_mod(narrow.nabla_ct, 6));
  }
}

TEST_CASE("s_q_inv for A1^(1) opens with the adjoint stratum") {
  const AffineType& T = load_type("A1^(1)");
  KernelSet K = build_kernels(T, 6);
  // e^0 + u (e^{2w} + e^0 + e^{-2w}) + O(u^2)
  CHECK(K.s_q_inv.coeff(FiniteWeight{0}).coeff(0) == 1);
  CHECK(K.s_q_inv.coeff(FiniteWeight{0}).coeff(1) == 1);
  CHECK(K.s_q_inv.coeff(FiniteWeight{2}).coeff(1) == 1);
  CHECK(K.s_q_inv.coeff(FiniteWeight{-2}).coeff(1) == 1);
  CHECK(K.s_q_inv.coeff(FiniteWeight{2}).coeff(0) == 0);
  CHECK(K.s_q_inv.coeff(FiniteWeight{1}).is_zero());
}

TEST_CASE("scalar products") {
  const AffineType& T = load_type("A1^(1)");
  KernelSet K = build_kernels(T, 8);
  CharElem unit = CharElem::unit(T, 8);
  CHECK(scalar_q(unit, unit, K).equal_mod(QSeries::one(8), 8));

  // <m_w, m_w>_q = 1 - u
  CharElem mw = monomial(T, FiniteWeight{1}, 8);
  QSeries expect = QSeries::one(8);
  expect.add_term(1, -1);
  CHECK(scalar_q(mw, mw, K).equal_mod(expect, 8));

  // finite product: m_w is the irreducible character of the 2-dim module
  CHECK(scalar_finite(mw, mw, K).equal_mod(QSeries::one(8), 8));

  CharElem skew = CharElem::exp(T, FiniteWeight{1}, 8);
  CHECK_THROWS_AS(scalar_q(skew, mw, K), std::invalid_argument);
}

TEST_CASE("scalar product symmetry on random invariant pairs") {
  std::mt19937 rng{41};
  for (const char* label : {"A2^(1)", "A2^(2)", "C2^(1)"}) {
    const AffineType& T = load_type(label);
    KernelSet K = build_kernels(T, 6);
    std::uniform_int_distribution<int> coord(0, 2);
    for (int trial = 0; trial < 6; ++trial) {
      FiniteWeight a(T.n), b(T.n);
      for (int i = 0; i < T.n; ++i) {
        a.c[i] = coord(rng);
        b.c[i] = coord(rng);
      }
      CharElem f = monomial(T, a, 6);
      CharElem g = monomial(T, b, 6);
      CHECK(scalar_q(f, g, K).equal_mod(scalar_q(g, f, K), 6));
    }
  }
}

TEST_CASE("orthonormality of irreducible characters under the finite product") {
  for (const char* label : {"A2^(1)", "C2^(1)", "A4^(2)", "D4^(3)"}) {
    const AffineType& T = load_type(label);
    KernelSet K = build_kernels(T, 4);
    std::vector<FiniteWeight> lams;
    FiniteWeight a(T.n), b(T.n), z(T.n);
    a.c[0] = 1;
    b.c[T.n - 1] = 2;
    lams = {z, a, b};
    for (const auto& x : lams)
      for (const auto& y : lams) {
        QSeries v = scalar_finite(irreducible_character(T, x, 4),
                                  irreducible_character(T, y, 4), K);
        if (x == y)
          CHECK(v.equal_mod(QSeries::one(4), 4));
        else
          CHECK(v.equal_mod(QSeries::zero(4), 4));
      }
  }
}
