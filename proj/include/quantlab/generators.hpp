#pragma once

// Classical first integrals of the superintegrable 2D anisotropic oscillator
//   H = (p_x^2 + p_y^2)/2 + omega^2 (x^2 + (n/m)^2 y^2)
// in Cartesian variables, with omega_1 = sqrt2*omega and m*omega_2 = n*omega_1.

#include <utility>

#include "quantlab/phase_poly.hpp"

namespace quantlab {

/// Frequency-ratio parameters (m, n); both strictly positive.
class OscillatorParams {
 public:
  /// Throws std::invalid_argument when m or n is zero.
  OscillatorParams(unsigned m, unsigned n);

  unsigned m() const { return m_; }
  unsigned n() const { return n_; }

  /// omega_1 = sqrt2*omega.
  Coefficient omega1() const;
  /// omega_2 = (n/m)*sqrt2*omega.
  Coefficient omega2() const;

  friend bool operator==(const OscillatorParams&, const OscillatorParams&) = default;

 private:
  unsigned m_;
  unsigned n_;
};

PhasePoly hamiltonian(const OscillatorParams& p);

/// L = p_x^2/2 + omega^2 x^2.
PhasePoly l_integral();

/// G_n = sum_k C(n, 2k+1) (-2 omega^2)^k x^(2k+1) p_x^(n-2k-1). Throws for n = 0.
PhasePoly g_poly(unsigned n);

/// P_{m,n} and D_{m,n} expanded in (u, p_u) and then moved to (y, p_y).
PhasePoly p_poly(const OscillatorParams& p);
PhasePoly d_poly(const OscillatorParams& p);

/// K_{m,n} = P G_n + D X_L(G_n).
PhasePoly k_integral(const OscillatorParams& p);

/// Unnormalized ladder integrals built from b1 = p_x - i omega_1 x and
/// b2 = p_y - i omega_2 y:
///   F1 = (b1^n b2*^m + b1*^n b2^m) / 2,  F2 = -i (b1^n b2*^m - b1*^n b2^m) / 2.
std::pair<PhasePoly, PhasePoly> ladder_integrals(const OscillatorParams& p);

/// Exact binomial coefficient.
mpz_class binomial(unsigned n, unsigned k);

}  // namespace quantlab
