#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace quantlab;
using quantlab::testing::Gen;

namespace {
const Coefficient I = Coefficient::i();
const Coefficient hbar = Coefficient::hbar();
const Coefficient omega = Coefficient::omega();
const Coefficient sqrt2 = Coefficient::sqrt2();
}  // namespace

TEST_CASE("coeff_add examples") {
  CHECK(coeff_add(Coefficient(), hbar * omega) == hbar * omega);
  CHECK(coeff_add(Coefficient::hbar(2), -Coefficient::hbar(2)).is_zero());
  CHECK(coeff_add(Coefficient(1) + I, Coefficient(1) - I) == Coefficient(2));
}

TEST_CASE("coeff_mul examples") {
  CHECK(coeff_mul(sqrt2, sqrt2) == Coefficient(2));
  CHECK(coeff_mul(Coefficient(1) + I, Coefficient(1) - I) == Coefficient(2));
  // omega_1^2 = 2 omega^2
  CHECK((sqrt2 * omega).pow(2) == Coefficient(2) * Coefficient::omega(2));
  CHECK(sqrt2.pow(3) == Coefficient(2) * sqrt2);
  CHECK(I * I == Coefficient(-1));
}

TEST_CASE("coeff_conj examples") {
  CHECK(coeff_conj(I) == -I);
  CHECK(coeff_conj(Coefficient(2) * hbar) == Coefficient(2) * hbar);
  CHECK(coeff_conj((Coefficient(1) + I) * sqrt2 * omega) == (Coefficient(1) - I) * sqrt2 * omega);
}

TEST_CASE("canonical form drops zeros and reduces rationals") {
  Coefficient c = Coefficient::ratio(2, 4) + Coefficient::ratio(-1, 2);
  CHECK(c.is_zero());
  CHECK(c.terms().empty());
  const Coefficient half = Coefficient::ratio(-3, -6);
  REQUIRE(half.size() == 1);
  CHECK(half.terms().begin()->second.re.get_num() == 1);
  CHECK(half.terms().begin()->second.re.get_den() == 2);
  CHECK_THROWS_AS(Coefficient::ratio(1, 0), std::invalid_argument);
}

TEST_CASE("min exponents") {
  const Coefficient c = Coefficient::hbar(3) * omega + Coefficient::hbar(2) * Coefficient::omega(4);
  CHECK(c.min_h_exp() == 2);
  CHECK(c.min_w_exp() == 1);
  CHECK(Coefficient().min_h_exp() == 0);
  CHECK(c.hbar_slice(2) == Coefficient::hbar(2) * Coefficient::omega(4));
  CHECK(c.hbar_slice(0).is_zero());
}

TEST_CASE("rendering is ordered by (h, w, r) descending") {
  const Coefficient c = Coefficient(3) + Coefficient::ratio(1, 2) * I * hbar +
                        (Coefficient(1) - Coefficient(2) * I) * Coefficient::hbar(2) * omega * sqrt2 -
                        Coefficient::omega(2);
  CHECK(render(c) == "(1-2*i)*hbar^2*omega*sqrt2 + 1/2*i*hbar - omega^2 + 3");
  CHECK(render(Coefficient()) == "0");
  CHECK(render(-I) == "-i");
  CHECK(render_scalar(Scalar(Rational(-3, 4), Rational(1))) == "-3/4+i");
  CHECK(render_latex(Coefficient::ratio(-3, 8) * Coefficient::hbar(2)) == "-\\frac{3}{8} \\hbar^{2}");
}

TEST_CASE("ring axioms on random triples") {
  Gen gen(0x5eed);
  for (int k = 0; k < 10000; ++k) {
    const Coefficient a = gen.coefficient();
    const Coefficient b = gen.coefficient();
    const Coefficient c = gen.coefficient();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + Coefficient() == a);
    REQUIRE(a * Coefficient(1) == a);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("conjugation is an involutive ring automorphism") {
  Gen gen(17);
  for (int k = 0; k < 2000; ++k) {
    const Coefficient a = gen.coefficient();
    const Coefficient b = gen.coefficient();
    REQUIRE(a.conj().conj() == a);
    REQUIRE((a * b).conj() == a.conj() * b.conj());
    REQUIRE((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("canonical form is unique") {
  Gen gen(99);
  for (int k = 0; k < 2000; ++k) {
    const Coefficient a = gen.coefficient();
    const Coefficient b = gen.coefficient();
    // Rebuild a through a different sequence of operations.
    const Coefficient a2 = (a * Coefficient(3) + b) - b - a - a;
    REQUIRE((a - b).is_zero() == (a.terms() == b.terms()));
    REQUIRE(a2 == a);
    REQUIRE(a2.terms() == a.terms());
  }
}
