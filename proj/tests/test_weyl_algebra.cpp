#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace quantlab;
using quantlab::testing::Gen;
using quantlab::testing::normal_order_word;
using quantlab::testing::P;

namespace {

const Coefficient I = Coefficient::i();
const Coefficient hbar = Coefficient::hbar();

Operator Op(const OpMono& m, const Coefficient& c = Coefficient(1)) { return Operator::monomial(m, c); }

/// The hbar^1 part of A divided by i*hbar.
Operator first_order_over_i_hbar(const Operator& A) {
  Operator out;
  for (const auto& [m, c] : A.terms()) {
    Coefficient reduced;
    const Coefficient slice = c.hbar_slice(1);
    for (const auto& [cm, s] : slice.terms()) {
      reduced += Coefficient(s * Scalar(Rational(0), Rational(-1)), {0, cm.w, cm.r});
    }
    out.add_term(m, reduced);
  }
  return out;
}

}  // namespace

TEST_CASE("op_mul examples") {
  CHECK(ops::px() * ops::x() == ops::x() * ops::px() - I * hbar * ops::identity());
  const Operator expected =
      Op({2, 0, 2, 0}) - Coefficient(4) * I * hbar * Op({1, 0, 1, 0}) - Coefficient(2) * Coefficient::hbar(2) * ops::identity();
  const Operator product = pow(ops::px(), 2) * pow(ops::x(), 2);
  CHECK(product == expected);
  // Cross-check on test polynomials: p^2 (x^2 f) against the normal form.
  Gen gen(3);
  for (int k = 0; k < 20; ++k) {
    const PhasePoly f = gen.position_poly();
    const PhasePoly lhs =
        apply_to_polynomial(pow(ops::px(), 2), apply_to_polynomial(pow(ops::x(), 2), f));
    CHECK(lhs == apply_to_polynomial(expected, f));
  }
  CHECK(ops::x() * ops::py() == Op({1, 0, 0, 1}));
  CHECK(ops::py() * ops::x() == Op({1, 0, 0, 1}));
}

TEST_CASE("closed-form reordering equals iterated single swaps for r, s <= 6") {
  for (unsigned s = 0; s <= 6; ++s) {
    for (unsigned r = 0; r <= 6; ++r) {
      CAPTURE(s);
      CAPTURE(r);
      CHECK(pow(ops::px(), s) * pow(ops::x(), r) ==
            normal_order_word(std::string(s, 'p') + std::string(r, 'x')));
      CHECK(pow(ops::py(), s) * pow(ops::y(), r) ==
            normal_order_word(std::string(s, 'q') + std::string(r, 'y')));
    }
  }
  // Mixed words.
  CHECK(Op({1, 1, 1, 1}) * Op({2, 1, 1, 2}) == normal_order_word("xypq" "xxypqq"));
  CHECK(Op({0, 0, 3, 2}) * Op({2, 3, 0, 0}) == normal_order_word("pppqq" "xxyyy"));
}

TEST_CASE("commutator examples") {
  CHECK(commutator(ops::x(), ops::px()) == I * hbar * ops::identity());
  CHECK(commutator(ops::y(), ops::py()) == I * hbar * ops::identity());
  CHECK(commutator(ops::x(), ops::py()).is_zero());
  CHECK(commutator(ops::px(), ops::py()).is_zero());

  const OscillatorParams p(4, 1);
  const Operator H = quantize(Scheme::Weyl, hamiltonian(p));
  const PhasePoly K = k_integral(p);
  CHECK(commutator(H, quantize(Scheme::Weyl, K)).is_zero());
  const Operator expected = Coefficient(-32) * I * Coefficient::hbar(3) * Coefficient::omega(2) * ops::px();
  CHECK(commutator(H, quantize(Scheme::BornJordan, K)) == expected);
  CHECK(to_diff_form(expected) ==
        DiffForm::monomial({0, 0, 1, 0}, Coefficient(-32) * Coefficient::hbar(4) * Coefficient::omega(2)));
}

TEST_CASE("classical_symbol examples") {
  const OscillatorParams p(4, 1);
  CHECK(classical_symbol(quantize(Scheme::Weyl, k_integral(p))) == k_integral(p));
  CHECK(classical_symbol(I * hbar * ops::identity()).is_zero());
  const Operator A = Op({2, 0, 2, 0}) - Coefficient(4) * I * hbar * Op({1, 0, 1, 0}) -
                     Coefficient(2) * Coefficient::hbar(2) * ops::identity();
  CHECK(classical_symbol(A) == P("x^2*px^2"));
}

TEST_CASE("apply_to_polynomial examples") {
  CHECK(apply_to_polynomial(ops::px(), P("x^2")) == P("-2*i*hbar*x"));
  // Q1 (Weyl) as printed: -(hbar^2/2)(2 y^2 Dy^2 + 4 y Dy + 1).
  const DiffForm q1 = Coefficient::ratio(-1, 2) * Coefficient::hbar(2) *
                      (DiffForm::monomial({0, 2, 0, 2}, Coefficient(2)) +
                       DiffForm::monomial({0, 1, 0, 1}, Coefficient(4)) + DiffForm(Coefficient(1)));
  CHECK(apply_diff_form(q1, P("y^2")) == P("-13/2*hbar^2*y^2"));
  CHECK(apply_to_polynomial(quantize(Scheme::Weyl, P("y^2*py^2")), P("y^2")) == P("-13/2*hbar^2*y^2"));

  const Operator bj_comm = Coefficient(-32) * I * Coefficient::hbar(3) * Coefficient::omega(2) * ops::px();
  CHECK(apply_to_polynomial(bj_comm, P("x")) == P("-32*hbar^4*omega^2"));
  CHECK_THROWS_AS(apply_to_polynomial(ops::px(), P("px")), std::invalid_argument);
}

TEST_CASE("diff-form rendering") {
  const DiffForm d = to_diff_form(Coefficient(-32) * I * Coefficient::hbar(3) * Coefficient::omega(2) * ops::px());
  CHECK(render(d) == "-32*hbar^4*omega^2*Dx");
  CHECK(render_latex(d) == "-32 \\hbar^{4} \\omega^{2} \\frac{\\partial}{\\partial x}");
  const DiffForm mixed = DiffForm::monomial({0, 1, 1, 3}, Coefficient(-256) * Coefficient::hbar(4));
  CHECK(render_latex(mixed) == "-256 \\hbar^{4} y \\frac{\\partial^{4}}{\\partial x \\partial y^{3}}");
  CHECK(render(Op({1, 0, 0, 4}, Coefficient(256))) == "256*x*py^4");
  CHECK(render_latex(Op({1, 0, 0, 4})) == "\\hat{x} \\hat{p}_y^{4}");
}

TEST_CASE("algebra laws on random operators") {
  Gen gen(11);
  for (int k = 0; k < 1000; ++k) {
    const Operator A = gen.op(3, 3);
    const Operator B = gen.op(3, 3);
    const Operator C = gen.op(2, 3);
    REQUIRE((A * B) * C == A * (B * C));
    REQUIRE(A * (B + C) == A * B + A * C);
    REQUIRE((A + B) * C == A * C + B * C);
    REQUIRE(commutator(A, A).is_zero());
    REQUIRE(commutator(A, B) == -commutator(B, A));
    REQUIRE((commutator(A, commutator(B, C)) + commutator(B, commutator(C, A)) +
             commutator(C, commutator(A, B)))
                .is_zero());
    REQUIRE(adjoint(adjoint(A)) == A);
    REQUIRE(adjoint(A * B) == adjoint(B) * adjoint(A));
  }
}

TEST_CASE("operator product agrees with composed actions") {
  Gen gen(12);
  for (int k = 0; k < 300; ++k) {
    const Operator A = gen.op(3, 3);
    const Operator B = gen.op(3, 3);
    const PhasePoly f = gen.position_poly(5, 4);
    REQUIRE(apply_to_polynomial(A * B, f) == apply_to_polynomial(A, apply_to_polynomial(B, f)));
  }
}

TEST_CASE("reconstruction from the action recovers the operator") {
  Gen gen(13);
  for (int k = 0; k < 300; ++k) {
    const Operator A = gen.op(4, 4);
    const PolynomialAction act = [&](const PhasePoly& f) { return apply_to_polynomial(A, f); };
    REQUIRE(reconstruct_diff_form(act, A.momentum_degree()) == to_diff_form(A));
    const Operator B = gen.op(3, 3);
    REQUIRE(commutator_matches_action(A, B, commutator(A, B)));
  }
  // A wrong commutator is rejected.
  CHECK_FALSE(commutator_matches_action(ops::x(), ops::px(), ops::identity()));
}

TEST_CASE("correspondence principle for Weyl-quantized polynomials") {
  Gen gen(14);
  for (int k = 0; k < 1000; ++k) {
    const PhasePoly f = gen.classical_poly(4, 3);
    const PhasePoly g = gen.classical_poly(4, 3);
    const Operator c = commutator(quantize(Scheme::Weyl, f), quantize(Scheme::Weyl, g));
    for (const auto& [m, coeff] : c.terms()) REQUIRE(coeff.min_h_exp() >= 1);
    REQUIRE(classical_symbol(first_order_over_i_hbar(c)) == poisson(f, g));
  }
}
