#include "quantlab/phase_poly.hpp"

#include <stdexcept>

namespace quantlab {

namespace vars {
PhasePoly x() { return PhasePoly::monomial({1, 0, 0, 0}); }
PhasePoly y() { return PhasePoly::monomial({0, 1, 0, 0}); }
PhasePoly px() { return PhasePoly::monomial({0, 0, 1, 0}); }
PhasePoly py() { return PhasePoly::monomial({0, 0, 0, 1}); }
PhasePoly constant(const Coefficient& c) { return PhasePoly(c); }
}  // namespace vars

namespace {

template <class Tag>
LinearCombination<Tag> commutative_product(const LinearCombination<Tag>& f,
                                           const LinearCombination<Tag>& g) {
  LinearCombination<Tag> out;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) {
      out.add_term({mf.a + mg.a, mf.b + mg.b, mf.c + mg.c, mf.d + mg.d}, cf * cg);
    }
  }
  return out;
}

template <class Tag>
LinearCombination<Tag> power(const LinearCombination<Tag>& f, unsigned e) {
  LinearCombination<Tag> result(Coefficient(1));
  for (unsigned k = 0; k < e; ++k) result = commutative_product(result, f);
  return result;
}

Rational rational_pow(const Rational& q, unsigned e) {
  Rational out = 1;
  for (unsigned k = 0; k < e; ++k) out *= q;
  return out;
}

}  // namespace

PhasePoly operator*(const PhasePoly& f, const PhasePoly& g) { return commutative_product(f, g); }
PhasePoly poly_mul(const PhasePoly& f, const PhasePoly& g) { return f * g; }
PhasePoly pow(const PhasePoly& f, unsigned e) { return power(f, e); }

SeparatedPoly operator*(const SeparatedPoly& f, const SeparatedPoly& g) {
  return commutative_product(f, g);
}
SeparatedPoly pow(const SeparatedPoly& f, unsigned e) { return power(f, e); }

PhasePoly partial(const PhasePoly& f, PhaseVar v) {
  PhasePoly out;
  for (const auto& [m, c] : f.terms()) {
    PhaseMono r = m;
    unsigned* slot = nullptr;
    switch (v) {
      case PhaseVar::X: slot = &r.a; break;
      case PhaseVar::Y: slot = &r.b; break;
      case PhaseVar::PX: slot = &r.c; break;
      case PhaseVar::PY: slot = &r.d; break;
    }
    if (*slot == 0) continue;
    const unsigned e = *slot;
    --*slot;
    out.add_term(r, Coefficient(static_cast<long>(e)) * c);
  }
  return out;
}

PhasePoly poisson(const PhasePoly& f, const PhasePoly& g) {
  using enum PhaseVar;
  return partial(f, X) * partial(g, PX) - partial(f, PX) * partial(g, X) +
         partial(f, Y) * partial(g, PY) - partial(f, PY) * partial(g, Y);
}

PhasePoly hamiltonian_flow_apply(const PhasePoly& L, const PhasePoly& G) { return poisson(G, L); }

bool is_position_only(const PhasePoly& f) { return f.momentum_degree() == 0; }

PhasePoly substitute_uy(const SeparatedPoly& f, unsigned m, unsigned n) {
  if (m == 0 || n == 0) {
    throw std::invalid_argument("substitute_uy: m and n must be positive integers");
  }
  const Rational n_over_m(n, m);
  const Rational m_over_n(m, n);
  PhasePoly out;
  for (const auto& [mono, c] : f.terms()) {
    Rational scale = rational_pow(n_over_m, mono.b) * rational_pow(m_over_n, mono.d);
    scale.canonicalize();
    out.add_term({mono.a, mono.b, mono.c, mono.d}, Coefficient(scale) * c);
  }
  return out;
}

std::string render(const PhasePoly& f) {
  return render_flat(f, [](const PhaseMono& m) {
    return join_nonempty({power_text("x", m.a), power_text("y", m.b), power_text("px", m.c),
                          power_text("py", m.d)},
                         "*");
  });
}

std::string render_latex(const PhasePoly& f) {
  return render_flat_latex(f, [](const PhaseMono& m) {
    return join_nonempty({power_latex("x", m.a), power_latex("y", m.b), power_latex("p_x", m.c),
                          power_latex("p_y", m.d)},
                         " ");
  });
}

std::string render(const SeparatedPoly& f) {
  return render_flat(f, [](const Exponents<SeparatedTag>& m) {
    return join_nonempty({power_text("x", m.a), power_text("u", m.b), power_text("px", m.c),
                          power_text("pu", m.d)},
                         "*");
  });
}

}  // namespace quantlab
