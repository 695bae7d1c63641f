#pragma once

// Born-Jordan and Weyl quantization of polynomial observables.
//
// Same-index monomials x^r p^s are mapped to
//   Born-Jordan: 1/(s+1)   sum_k          p^(s-k) x^r p^k
//   Weyl:        1/2^s     sum_k C(s,k)   p^(s-k) x^r p^k
// and mixed monomials factor as (x^a p_x^c)(y^b p_y^d), whose quantized
// factors commute.

#include <string_view>

#include "quantlab/generators.hpp"
#include "quantlab/weyl_algebra.hpp"

namespace quantlab {

enum class Scheme { BornJordan, Weyl };

std::string_view scheme_name(Scheme s);

/// One-index rule for x^r p^s, written in the x / p_x slots.
Operator quantize_one_index(Scheme s, unsigned r, unsigned p_power);

Operator quantize_monomial(Scheme s, const PhaseMono& m);
Operator quantize(Scheme s, const PhasePoly& f);

enum class LadderIntegral { F1 = 1, F2 = 2 };

/// The ladder integral with p_x, p_y replaced by operators inside the
/// factored products b1^n b2*^m etc.
Operator quantize_ladder(const OscillatorParams& p, LadderIntegral which);

}  // namespace quantlab
