#include "quantlab/weyl_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "quantlab/generators.hpp"

namespace quantlab {

namespace ops {
Operator x() { return Operator::monomial({1, 0, 0, 0}); }
Operator y() { return Operator::monomial({0, 1, 0, 0}); }
Operator px() { return Operator::monomial({0, 0, 1, 0}); }
Operator py() { return Operator::monomial({0, 0, 0, 1}); }
Operator identity() { return Operator(Coefficient(1)); }
Operator scalar(const Coefficient& c) { return Operator(c); }
}  // namespace ops

namespace {

mpz_class factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class falling(unsigned n, unsigned k) {
  mpz_class out = 1;
  for (unsigned j = 0; j < k; ++j) out *= (n - j);
  return out;
}

/// (-i hbar)^k
Coefficient minus_i_hbar(unsigned k) {
  return (-Coefficient::i() * Coefficient::hbar()).pow(k);
}

/// k! C(s,k) C(r,k) (-i hbar)^k, the weight of x^(r-k) p^(s-k) in p^s x^r.
Coefficient reorder_weight(unsigned s, unsigned r, unsigned k) {
  const mpz_class w = factorial(k) * binomial(s, k) * binomial(r, k);
  return Coefficient(Rational(w)) * minus_i_hbar(k);
}

void require_position_only(const PhasePoly& f, const char* where) {
  if (!is_position_only(f)) {
    throw std::invalid_argument(std::string(where) + ": argument must be a polynomial in x, y only");
  }
}

}  // namespace

Operator operator*(const Operator& A, const Operator& B) {
  Operator out;
  for (const auto& [l, cl] : A.terms()) {
    for (const auto& [r, cr] : B.terms()) {
      const Coefficient base = cl * cr;
      const unsigned kx = std::min(l.c, r.a);
      const unsigned ky = std::min(l.d, r.b);
      for (unsigned k = 0; k <= kx; ++k) {
        const Coefficient wx = reorder_weight(l.c, r.a, k);
        for (unsigned j = 0; j <= ky; ++j) {
          out.add_term({l.a + r.a - k, l.b + r.b - j, l.c + r.c - k, l.d + r.d - j},
                       base * wx * reorder_weight(l.d, r.b, j));
        }
      }
    }
  }
  return out;
}

Operator op_mul(const Operator& A, const Operator& B) { return A * B; }

Operator pow(const Operator& A, unsigned e) {
  Operator result = ops::identity();
  for (unsigned k = 0; k < e; ++k) result = result * A;
  return result;
}

Operator commutator(const Operator& A, const Operator& B) { return A * B - B * A; }

PhasePoly classical_symbol(const Operator& A) {
  PhasePoly out;
  for (const auto& [m, c] : A.terms()) out.add_term({m.a, m.b, m.c, m.d}, c.hbar_slice(0));
  return out;
}

Operator adjoint(const Operator& A) {
  Operator out;
  for (const auto& [m, c] : A.terms()) {
    const Operator momenta = Operator::monomial({0, 0, m.c, m.d}, c.conj());
    const Operator positions = Operator::monomial({m.a, m.b, 0, 0});
    out += momenta * positions;
  }
  return out;
}

DiffForm to_diff_form(const Operator& A) {
  DiffForm out;
  for (const auto& [m, c] : A.terms()) {
    out.add_term({m.a, m.b, m.c, m.d}, c * minus_i_hbar(m.c + m.d));
  }
  return out;
}

PhasePoly apply_diff_form(const DiffForm& D, const PhasePoly& f) {
  require_position_only(f, "apply_diff_form");
  PhasePoly out;
  for (const auto& [m, c] : D.terms()) {
    for (const auto& [g, cg] : f.terms()) {
      if (m.c > g.a || m.d > g.b) continue;
      const mpz_class k = falling(g.a, m.c) * falling(g.b, m.d);
      out.add_term({m.a + g.a - m.c, m.b + g.b - m.d, 0, 0}, Coefficient(Rational(k)) * c * cg);
    }
  }
  return out;
}

PhasePoly apply_to_polynomial(const Operator& A, const PhasePoly& f) {
  require_position_only(f, "apply_to_polynomial");
  PhasePoly out;
  for (const auto& [m, c] : A.terms()) {
    const Coefficient scaled = c * minus_i_hbar(m.c + m.d);
    for (const auto& [g, cg] : f.terms()) {
      if (m.c > g.a || m.d > g.b) continue;
      const mpz_class k = falling(g.a, m.c) * falling(g.b, m.d);
      out.add_term({m.a + g.a - m.c, m.b + g.b - m.d, 0, 0},
                   Coefficient(Rational(k)) * scaled * cg);
    }
  }
  return out;
}

DiffForm reconstruct_diff_form(const PolynomialAction& action, unsigned max_order) {
  DiffForm found;
  for (unsigned order = 0; order <= max_order; ++order) {
    for (unsigned c = 0; c <= order; ++c) {
      const unsigned d = order - c;
      const PhasePoly probe = PhasePoly::monomial({c, d, 0, 0});
      // Lower-order terms are already known; what remains is c! d! times the
      // coefficient polynomial of Dx^c Dy^d.
      const PhasePoly rest = action(probe) - apply_diff_form(found, probe);
      require_position_only(rest, "reconstruct_diff_form");
      Rational inv(1, factorial(c) * factorial(d));
      inv.canonicalize();
      for (const auto& [g, cg] : rest.terms()) {
        found.add_term({g.a, g.b, c, d}, Coefficient(inv) * cg);
      }
    }
  }
  return found;
}

bool commutator_matches_action(const Operator& A, const Operator& B, const Operator& symbolic) {
  const unsigned order = A.momentum_degree() + B.momentum_degree();
  const PolynomialAction action = [&](const PhasePoly& f) {
    return apply_to_polynomial(A, apply_to_polynomial(B, f)) -
           apply_to_polynomial(B, apply_to_polynomial(A, f));
  };
  return reconstruct_diff_form(action, order) == to_diff_form(symbolic);
}

std::string render(const Operator& A) {
  return render_flat(A, [](const OpMono& m) {
    return join_nonempty({power_text("x", m.a), power_text("y", m.b), power_text("px", m.c),
                          power_text("py", m.d)},
                         "*");
  });
}

std::string render_latex(const Operator& A) {
  return render_flat_latex(A, [](const OpMono& m) {
    return join_nonempty({power_latex("\\hat{x}", m.a), power_latex("\\hat{y}", m.b),
                          power_latex("\\hat{p}_x", m.c), power_latex("\\hat{p}_y", m.d)},
                         " ");
  });
}

std::string render(const DiffForm& D) {
  return render_flat(D, [](const DiffMono& m) {
    return join_nonempty({power_text("x", m.a), power_text("y", m.b), power_text("Dx", m.c),
                          power_text("Dy", m.d)},
                         "*");
  });
}

std::string render_latex(const DiffForm& D) {
  return render_flat_latex(D, [](const DiffMono& m) {
    std::string derivative;
    if (m.c + m.d > 0) {
      const std::string bottom =
          join_nonempty({power_latex("\\partial x", m.c), power_latex("\\partial y", m.d)}, " ");
      derivative = "\\frac{" + power_latex("\\partial", m.c + m.d) + "}{" + bottom + "}";
    }
    return join_nonempty({power_latex("x", m.a), power_latex("y", m.b), derivative}, " ");
  });
}

}  // namespace quantlab
