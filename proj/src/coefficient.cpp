#include "quantlab/coefficient.hpp"

#include <algorithm>
#include <stdexcept>

namespace quantlab {

Scalar::Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
  re.canonicalize();
  im.canonicalize();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Coefficient::Coefficient(Scalar s, CoeffMono mono) {
  if (mono.r > 1) {
    // sqrt2^(2k+r) = 2^k sqrt2^r
    const unsigned k = mono.r / 2;
    mono.r %= 2;
    Rational scale = 1;
    for (unsigned j = 0; j < k; ++j) scale *= 2;
    s *= Scalar(scale);
  }
  add_term(mono, s);
}

Coefficient Coefficient::sqrt2() { return Coefficient(Scalar(1), {0, 0, 1}); }

Coefficient Coefficient::ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("Coefficient::ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Coefficient(Scalar(q));
}

bool Coefficient::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_real(); });
}

unsigned Coefficient::min_h_exp() const {
  if (terms_.empty()) return 0;
  unsigned best = terms_.begin()->first.h;
  for (const auto& [mono, s] : terms_) best = std::min(best, mono.h);
  return best;
}

unsigned Coefficient::min_w_exp() const {
  if (terms_.empty()) return 0;
  unsigned best = terms_.begin()->first.w;
  for (const auto& [mono, s] : terms_) best = std::min(best, mono.w);
  return best;
}

Coefficient Coefficient::conj() const {
  Coefficient out;
  for (const auto& [mono, s] : terms_) out.terms_.emplace(mono, s.conj());
  return out;
}

Coefficient Coefficient::pow(unsigned e) const {
  Coefficient result(1);
  Coefficient base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Coefficient Coefficient::hbar_slice(unsigned h) const {
  Coefficient out;
  for (const auto& [mono, s] : terms_) {
    if (mono.h == h) out.terms_.emplace(mono, s);
  }
  return out;
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  for (const auto& [mono, s] : terms_) out.terms_.emplace(mono, -s);
  return out;
}

void Coefficient::add_term(const CoeffMono& mono, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [mono, s] : o.terms_) add_term(mono, s);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& [mono, s] : o.terms_) add_term(mono, -s);
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  for (const auto& [ma, sa] : a.terms_) {
    for (const auto& [mb, sb] : b.terms_) {
      CoeffMono mono{ma.h + mb.h, ma.w + mb.w, ma.r + mb.r};
      Scalar s = sa * sb;
      if (mono.r == 2) {
        mono.r = 0;
        s *= Scalar(Rational(2));
      }
      out.add_term(mono, s);
    }
  }
  return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  *this = *this * o;
  return *this;
}

Coefficient coeff_add(const Coefficient& a, const Coefficient& b) { return a + b; }
Coefficient coeff_mul(const Coefficient& a, const Coefficient& b) { return a * b; }
Coefficient coeff_conj(const Coefficient& a) { return a.conj(); }

// ---------------------------------------------------------------------------
// Rendering

std::string render_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string render_latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = sgn(q) < 0 ? "-" : "";
  mpz_class num = abs(q.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string render_scalar(const Scalar& s) {
  if (s.is_real()) return render_rational(s.re);
  const Rational mag = abs(s.im);
  const std::string imag = (mag == 1 ? std::string("i") : render_rational(mag) + "*i");
  if (sgn(s.re) == 0) return (sgn(s.im) < 0 ? "-" : "") + imag;
  return render_rational(s.re) + (sgn(s.im) < 0 ? "-" : "+") + imag;
}

std::string render_coeff_mono(const CoeffMono& mono) {
  std::vector<std::string> parts;
  auto push = [&](const char* name, unsigned e) {
    if (e == 0) return;
    parts.push_back(e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e));
  };
  push("hbar", mono.h);
  push("omega", mono.w);
  push("sqrt2", mono.r);
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += "*";
    out += parts[k];
  }
  return out;
}

std::string render_latex_coeff_mono(const CoeffMono& mono) {
  std::vector<std::string> parts;
  auto push = [&](const char* name, unsigned e) {
    if (e == 0) return;
    parts.push_back(e == 1 ? std::string(name)
                           : std::string(name) + "^{" + std::to_string(e) + "}");
  };
  push("\\hbar", mono.h);
  push("\\omega", mono.w);
  push("\\sqrt{2}", mono.r);
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += " ";
    out += parts[k];
  }
  return out;
}

SignedText render_signed(const Scalar& s, const std::string& factors) {
  SignedText out;
  auto attach = [&](std::string head, bool unit) {
    if (factors.empty()) return head;
    return unit ? factors : head + "*" + factors;
  };
  if (s.is_real()) {
    out.negative = sgn(s.re) < 0;
    const Rational mag = abs(s.re);
    out.body = attach(render_rational(mag), mag == 1);
  } else if (sgn(s.re) == 0) {
    out.negative = sgn(s.im) < 0;
    const Rational mag = abs(s.im);
    std::string head = mag == 1 ? std::string("i") : render_rational(mag) + "*i";
    out.body = factors.empty() ? head : head + "*" + factors;
  } else {
    std::string head = "(" + render_scalar(s) + ")";
    out.body = factors.empty() ? head : head + "*" + factors;
  }
  return out;
}

SignedText render_signed_latex(const Scalar& s, const std::string& factors) {
  SignedText out;
  auto attach = [&](const std::string& head, bool unit) {
    if (factors.empty()) return head;
    return unit ? factors : head + " " + factors;
  };
  if (s.is_real()) {
    out.negative = sgn(s.re) < 0;
    const Rational mag = abs(s.re);
    out.body = attach(render_latex_rational(mag), mag == 1);
  } else if (sgn(s.re) == 0) {
    out.negative = sgn(s.im) < 0;
    const Rational mag = abs(s.im);
    std::string head = mag == 1 ? std::string("i") : render_latex_rational(mag) + " i";
    out.body = factors.empty() ? head : head + " " + factors;
  } else {
    const Rational mag = abs(s.im);
    std::string imag = mag == 1 ? std::string("i") : render_latex_rational(mag) + " i";
    std::string head = "\\left(" + render_latex_rational(s.re) +
                       (sgn(s.im) < 0 ? " - " : " + ") + imag + "\\right)";
    out.body = factors.empty() ? head : head + " " + factors;
  }
  return out;
}

std::string join_signed(const std::vector<SignedText>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k == 0) {
      out = (parts[k].negative ? "-" : "") + parts[k].body;
    } else {
      out += (parts[k].negative ? " - " : " + ") + parts[k].body;
    }
  }
  return out;
}

std::string render(const Coefficient& c) {
  std::vector<SignedText> parts;
  for (const auto& [mono, s] : c.terms()) parts.push_back(render_signed(s, render_coeff_mono(mono)));
  return join_signed(parts);
}

std::string render_latex(const Coefficient& c) {
  std::vector<SignedText> parts;
  for (const auto& [mono, s] : c.terms()) {
    parts.push_back(render_signed_latex(s, render_latex_coeff_mono(mono)));
  }
  return join_signed(parts);
}

}  // namespace quantlab
