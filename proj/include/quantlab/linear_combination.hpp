#pragma once

// Sparse Coefficient-linear combinations of four-exponent monomials. The
// monomial tag keeps classical polynomials, normal-ordered operators and
// differential-operator forms as distinct types sharing one container.

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "quantlab/coefficient.hpp"

namespace quantlab {

template <class Tag>
struct Exponents {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;
  unsigned d = 0;

  unsigned degree() const { return a + b + c + d; }
  unsigned position_degree() const { return a + b; }
  unsigned momentum_degree() const { return c + d; }

  auto operator<=>(const Exponents&) const = default;
};

/// Graded lexicographic order, largest first: total degree, then (a, b, c, d).
struct GradedLexGreater {
  template <class Tag>
  bool operator()(const Exponents<Tag>& l, const Exponents<Tag>& r) const {
    if (l.degree() != r.degree()) return l.degree() > r.degree();
    return l > r;
  }
};

template <class Tag>
class LinearCombination {
 public:
  using Mono = Exponents<Tag>;
  using TermMap = std::map<Mono, Coefficient, GradedLexGreater>;

  LinearCombination() = default;
  explicit LinearCombination(const Coefficient& constant) { add_term(Mono{}, constant); }

  static LinearCombination monomial(const Mono& m, const Coefficient& c = Coefficient(1)) {
    LinearCombination out;
    out.add_term(m, c);
    return out;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coefficient coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coefficient() : it->second;
  }

  void add_term(const Mono& m, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  unsigned degree() const {
    unsigned best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.degree());
    return best;
  }
  unsigned momentum_degree() const {
    unsigned best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.momentum_degree());
    return best;
  }
  unsigned position_degree() const {
    unsigned best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.position_degree());
    return best;
  }

  /// Minimum hbar / omega exponent over every scalar term; 0 when empty.
  unsigned min_h_exp() const { return min_over([](const Coefficient& c) { return c.min_h_exp(); }); }
  unsigned min_w_exp() const { return min_over([](const Coefficient& c) { return c.min_w_exp(); }); }

  bool has_real_coefficients() const {
    for (const auto& [m, c] : terms_) {
      if (!c.is_real()) return false;
    }
    return true;
  }

  /// Applies `f` to every coefficient, dropping terms that become zero.
  template <class F>
  LinearCombination map_coefficients(F&& f) const {
    LinearCombination out;
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  LinearCombination operator-() const {
    return map_coefficients([](const Coefficient& c) { return -c; });
  }
  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination l, const LinearCombination& r) { return l += r; }
  friend LinearCombination operator-(LinearCombination l, const LinearCombination& r) { return l -= r; }

  friend LinearCombination operator*(const Coefficient& k, const LinearCombination& v) {
    if (k.is_zero()) return {};
    return v.map_coefficients([&](const Coefficient& c) { return k * c; });
  }
  friend LinearCombination operator*(const LinearCombination& v, const Coefficient& k) { return k * v; }

  friend bool operator==(const LinearCombination& l, const LinearCombination& r) {
    return l.terms_ == r.terms_;
  }

 private:
  template <class F>
  unsigned min_over(F&& f) const {
    if (terms_.empty()) return 0;
    unsigned best = f(terms_.begin()->second);
    for (const auto& [m, c] : terms_) best = std::min(best, f(c));
    return best;
  }

  TermMap terms_;
};

/// Renders a flat sum: every (monomial, coefficient term) pair becomes one
/// summand `scalar*coeff_mono*factors`. `factor_text` renders the monomial's
/// own factors ('*'-joined, empty for the unit monomial).
template <class Tag, class FactorText>
std::string render_flat(const LinearCombination<Tag>& v, FactorText&& factor_text) {
  std::vector<SignedText> parts;
  for (const auto& [m, c] : v.terms()) {
    const std::string vars = factor_text(m);
    for (const auto& [cm, s] : c.terms()) {
      std::string factors = render_coeff_mono(cm);
      if (!vars.empty()) factors = factors.empty() ? vars : factors + "*" + vars;
      parts.push_back(render_signed(s, factors));
    }
  }
  return join_signed(parts);
}

template <class Tag, class FactorText>
std::string render_flat_latex(const LinearCombination<Tag>& v, FactorText&& factor_text) {
  std::vector<SignedText> parts;
  for (const auto& [m, c] : v.terms()) {
    const std::string vars = factor_text(m);
    for (const auto& [cm, s] : c.terms()) {
      std::string factors = render_latex_coeff_mono(cm);
      if (!vars.empty()) factors = factors.empty() ? vars : factors + " " + vars;
      parts.push_back(render_signed_latex(s, factors));
    }
  }
  return join_signed(parts);
}

/// `name`, `name^e`, or empty when e == 0.
inline std::string power_text(const std::string& name, unsigned e) {
  if (e == 0) return {};
  return e == 1 ? name : name + "^" + std::to_string(e);
}

inline std::string power_latex(const std::string& name, unsigned e) {
  if (e == 0) return {};
  return e == 1 ? name : name + "^{" + std::to_string(e) + "}";
}

/// Joins the non-empty pieces with `sep`.
inline std::string join_nonempty(const std::vector<std::string>& pieces, const std::string& sep) {
  std::string out;
  for (const auto& p : pieces) {
    if (p.empty()) continue;
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace quantlab
