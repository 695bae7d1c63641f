#pragma once

// Exact coefficients in Q(i)[sqrt2][hbar, omega].

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quantlab {

using Rational = mpq_class;

/// Gaussian rational re + im*i.
struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(Rational r, Rational i = Rational(0));

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// hbar^h * omega^w * sqrt2^r with r in {0, 1}.
struct CoeffMono {
  unsigned h = 0;
  unsigned w = 0;
  unsigned r = 0;

  auto operator<=>(const CoeffMono&) const = default;
};

/// Finite sum of Scalar * CoeffMono. Zero scalars are never stored, so
/// structural equality is value equality.
class Coefficient {
 public:
  // Descending (h, w, r) order, which is also the rendering order.
  using TermMap = std::map<CoeffMono, Scalar, std::greater<CoeffMono>>;

  Coefficient() = default;
  Coefficient(Scalar s, CoeffMono mono = {});
  Coefficient(const Rational& q) : Coefficient(Scalar(q)) {}
  Coefficient(long v) : Coefficient(Scalar(Rational(v))) {}
  Coefficient(int v) : Coefficient(Scalar(Rational(v))) {}

  static Coefficient i() { return Coefficient(Scalar::i()); }
  static Coefficient hbar(unsigned power = 1) { return Coefficient(Scalar(1), {power, 0, 0}); }
  static Coefficient omega(unsigned power = 1) { return Coefficient(Scalar(1), {0, power, 0}); }
  static Coefficient sqrt2();
  static Coefficient ratio(long num, long den);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;
  std::size_t size() const { return terms_.size(); }

  /// Minimum hbar / omega exponent over the terms; 0 for the zero coefficient.
  unsigned min_h_exp() const;
  unsigned min_w_exp() const;

  Coefficient conj() const;
  Coefficient pow(unsigned e) const;

  /// Keeps only the terms whose hbar exponent equals `h`.
  Coefficient hbar_slice(unsigned h) const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.terms_ == b.terms_;
  }

  /// Adds s * mono in place.
  void add_term(const CoeffMono& mono, const Scalar& s);

 private:
  TermMap terms_;
};

Coefficient coeff_add(const Coefficient& a, const Coefficient& b);
Coefficient coeff_mul(const Coefficient& a, const Coefficient& b);
Coefficient coeff_conj(const Coefficient& a);

// Rendering. Text output is accepted back by the expression parser.

std::string render_rational(const Rational& q);
std::string render_scalar(const Scalar& s);
std::string render_latex_rational(const Rational& q);

/// `hbar^h * omega^w * sqrt2` with unit factors omitted; empty for the unit
/// monomial.
std::string render_coeff_mono(const CoeffMono& mono);
std::string render_latex_coeff_mono(const CoeffMono& mono);

/// `a+b*i` scalars times monomials, terms in descending (h, w, r) order.
std::string render(const Coefficient& c);
std::string render_latex(const Coefficient& c);

/// One summand of a rendered sum: a scalar pulled in front of an already
/// rendered product of factors.
struct SignedText {
  bool negative = false;
  std::string body;
};

/// `factors` is a '*'-joined product (text) or space-joined product (latex),
/// possibly empty.
SignedText render_signed(const Scalar& s, const std::string& factors);
SignedText render_signed_latex(const Scalar& s, const std::string& factors);

/// Joins summands as `a + b - c`; "0" for an empty sum.
std::string join_signed(const std::vector<SignedText>& parts);

}  // namespace quantlab
