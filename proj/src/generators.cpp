#include "quantlab/generators.hpp"

#include <stdexcept>

namespace quantlab {

namespace {

using SeparatedMono = Exponents<SeparatedTag>;

Coefficient integer(const mpz_class& z) { return Coefficient(Rational(z)); }

/// (-2 omega^2)^k
Coefficient minus_two_omega_sq(unsigned k) {
  return (Coefficient(-2) * Coefficient::omega(2)).pow(k);
}

/// (-(m/n) u)^e as a separated monomial term.
SeparatedPoly scaled_u_power(unsigned m, unsigned n, unsigned e) {
  Rational ratio(-static_cast<long>(m), n);
  ratio.canonicalize();
  return SeparatedPoly::monomial({0, e, 0, 0}, Coefficient(ratio).pow(e));
}

SeparatedPoly pu_power(unsigned e) { return SeparatedPoly::monomial({0, 0, 0, e}); }

}  // namespace

OscillatorParams::OscillatorParams(unsigned m, unsigned n) : m_(m), n_(n) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("OscillatorParams: m and n must be positive integers, got (" +
                                std::to_string(m) + "," + std::to_string(n) + ")");
  }
}

Coefficient OscillatorParams::omega1() const { return Coefficient::sqrt2() * Coefficient::omega(); }

Coefficient OscillatorParams::omega2() const {
  Rational ratio(n_, m_);
  ratio.canonicalize();
  return Coefficient(ratio) * omega1();
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

PhasePoly hamiltonian(const OscillatorParams& p) {
  Rational ratio_sq(p.n() * p.n(), p.m() * p.m());
  ratio_sq.canonicalize();
  const Coefficient half = Coefficient::ratio(1, 2);
  const Coefficient w2 = Coefficient::omega(2);
  using namespace vars;
  return half * (pow(px(), 2) + pow(py(), 2)) + w2 * pow(x(), 2) +
         (Coefficient(ratio_sq) * w2) * pow(y(), 2);
}

PhasePoly l_integral() {
  using namespace vars;
  return Coefficient::ratio(1, 2) * pow(px(), 2) + Coefficient::omega(2) * pow(x(), 2);
}

PhasePoly g_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("g_poly: n must be positive");
  PhasePoly out;
  for (unsigned k = 0; 2 * k + 1 <= n; ++k) {
    out.add_term({2 * k + 1, 0, n - 2 * k - 1, 0},
                 integer(binomial(n, 2 * k + 1)) * minus_two_omega_sq(k));
  }
  return out;
}

PhasePoly p_poly(const OscillatorParams& p) {
  const unsigned m = p.m();
  SeparatedPoly sum;
  for (unsigned k = 0; 2 * k <= m; ++k) {
    sum += (integer(binomial(m, 2 * k)) * minus_two_omega_sq(k)) *
           (scaled_u_power(m, p.n(), 2 * k) * pu_power(m - 2 * k));
  }
  return substitute_uy(sum, m, p.n());
}

PhasePoly d_poly(const OscillatorParams& p) {
  const unsigned m = p.m();
  const unsigned n = p.n();
  SeparatedPoly sum;
  if (m == 1) {
    Rational c(-1, n * n);
    c.canonicalize();
    sum = SeparatedPoly::monomial({0, 1, 0, 0}, Coefficient(c));
  } else {
    for (unsigned k = 0; 2 * k + 1 <= m; ++k) {
      sum += (integer(binomial(m, 2 * k + 1)) * minus_two_omega_sq(k)) *
             (scaled_u_power(m, n, 2 * k + 1) * pu_power(m - 2 * k - 1));
    }
    sum = Coefficient::ratio(1, n) * sum;
  }
  return substitute_uy(sum, m, n);
}

PhasePoly k_integral(const OscillatorParams& p) {
  const PhasePoly g = g_poly(p.n());
  return p_poly(p) * g + d_poly(p) * hamiltonian_flow_apply(l_integral(), g);
}

std::pair<PhasePoly, PhasePoly> ladder_integrals(const OscillatorParams& p) {
  using namespace vars;
  const Coefficient i = Coefficient::i();
  const PhasePoly b1 = px() - (i * p.omega1()) * x();
  const PhasePoly b1c = px() + (i * p.omega1()) * x();
  const PhasePoly b2 = py() - (i * p.omega2()) * y();
  const PhasePoly b2c = py() + (i * p.omega2()) * y();

  const PhasePoly forward = pow(b1, p.n()) * pow(b2c, p.m());
  const PhasePoly backward = pow(b1c, p.n()) * pow(b2, p.m());
  const Coefficient half = Coefficient::ratio(1, 2);
  return {half * (forward + backward), (-half * i) * (forward - backward)};
}

}  // namespace quantlab
