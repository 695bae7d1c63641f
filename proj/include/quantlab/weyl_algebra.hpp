#pragma once

// Two-degree-of-freedom Weyl algebra over Coefficient.
//
// An Operator stores normal-ordered words x^a y^b px^c py^d (positions left of
// momenta) with [x, px] = [y, py] = i*hbar. A DiffForm stores the same
// operator under px = -i*hbar d/dx, py = -i*hbar d/dy, as x^a y^b Dx^c Dy^d.

#include <functional>
#include <string>

#include "quantlab/phase_poly.hpp"

namespace quantlab {

struct OpTag {};
struct DiffTag {};

using OpMono = Exponents<OpTag>;
using Operator = LinearCombination<OpTag>;
using DiffMono = Exponents<DiffTag>;
using DiffForm = LinearCombination<DiffTag>;

namespace ops {
Operator x();
Operator y();
Operator px();
Operator py();
Operator identity();
Operator scalar(const Coefficient& c);
}  // namespace ops

/// Normal-ordered product, using
///   px^s x^r = sum_k k! C(s,k) C(r,k) (-i hbar)^k x^(r-k) px^(s-k)
/// for each index; operators of different indices commute.
Operator operator*(const Operator& A, const Operator& B);
Operator op_mul(const Operator& A, const Operator& B);
Operator pow(const Operator& A, unsigned e);

/// AB - BA.
Operator commutator(const Operator& A, const Operator& B);

/// hbar^0 part with px -> p_x.
PhasePoly classical_symbol(const Operator& A);

/// Formal adjoint: each word reversed, coefficients conjugated.
Operator adjoint(const Operator& A);

/// Every term multiplied by (-i hbar)^(c+d).
DiffForm to_diff_form(const Operator& A);

/// Action on a position polynomial in (x, y), hbar kept symbolic. Throws
/// std::invalid_argument when `f` contains momenta.
PhasePoly apply_to_polynomial(const Operator& A, const PhasePoly& f);
PhasePoly apply_diff_form(const DiffForm& D, const PhasePoly& f);

using PolynomialAction = std::function<PhasePoly(const PhasePoly&)>;

/// Recovers the unique differential operator of order <= max_order whose
/// action on x^i y^j (i + j <= max_order) matches `action`. Only the action
/// is consulted, never the operator product.
DiffForm reconstruct_diff_form(const PolynomialAction& action, unsigned max_order);

/// Checks commutator(A, B) against the reconstruction of f -> A(B f) - B(A f)
/// on the monomial basis up to the commutator's maximal possible order.
bool commutator_matches_action(const Operator& A, const Operator& B, const Operator& symbolic);

std::string render(const Operator& A);
std::string render_latex(const Operator& A);
std::string render(const DiffForm& D);
std::string render_latex(const DiffForm& D);

}  // namespace quantlab
