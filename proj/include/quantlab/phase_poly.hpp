#pragma once

// Commutative polynomials in (x, y, p_x, p_y) over Coefficient.

#include <string>

#include "quantlab/linear_combination.hpp"

namespace quantlab {

struct PhaseTag {};
/// Exponents of (x, u, p_x, p_u); only ever an intermediate before substitute_uy.
struct SeparatedTag {};

using PhaseMono = Exponents<PhaseTag>;
using PhasePoly = LinearCombination<PhaseTag>;
using SeparatedPoly = LinearCombination<SeparatedTag>;

enum class PhaseVar { X, Y, PX, PY };

namespace vars {
PhasePoly x();
PhasePoly y();
PhasePoly px();
PhasePoly py();
PhasePoly constant(const Coefficient& c);
}  // namespace vars

PhasePoly operator*(const PhasePoly& f, const PhasePoly& g);
PhasePoly poly_mul(const PhasePoly& f, const PhasePoly& g);
PhasePoly pow(const PhasePoly& f, unsigned e);

PhasePoly partial(const PhasePoly& f, PhaseVar v);

/// {f,g} = f_x g_px - f_px g_x + f_y g_py - f_py g_y.
PhasePoly poisson(const PhasePoly& f, const PhasePoly& g);

/// X_L(G) = {G, L}, so X_L(x) = dL/dp_x.
PhasePoly hamiltonian_flow_apply(const PhasePoly& L, const PhasePoly& G);

/// True when no p_x or p_y appears.
bool is_position_only(const PhasePoly& f);

SeparatedPoly operator*(const SeparatedPoly& f, const SeparatedPoly& g);
SeparatedPoly pow(const SeparatedPoly& f, unsigned e);

/// Eliminates (u, p_u) through u = (n/m) y, p_u = (m/n) p_y. Throws
/// std::invalid_argument when m or n is zero.
PhasePoly substitute_uy(const SeparatedPoly& f, unsigned m, unsigned n);

/// Plain text with the parser's grammar: `3/4*omega^2*x*y^2*py^2 - ...`.
std::string render(const PhasePoly& f);
std::string render_latex(const PhasePoly& f);
std::string render(const SeparatedPoly& f);

}  // namespace quantlab
