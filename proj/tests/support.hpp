#pragma once

// Shared test helpers: seeded random generators for the algebraic types and
// an independent normal-ordering oracle that only knows the single swap
// p x = x p - i hbar.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "quantlab/parser.hpp"
#include "quantlab/quantizer.hpp"

namespace quantlab::testing {

inline PhasePoly P(const char* text) { return parse_poly(text); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 6) {
    Rational q(uniform(-span, span), uniform(1, 4));
    q.canonicalize();
    return q;
  }

  Scalar scalar(bool real_only = false) {
    return real_only ? Scalar(rational()) : Scalar(rational(), uniform(0, 2) == 0 ? Rational(0) : rational());
  }

  Coefficient coefficient(bool real_only = false) {
    Coefficient c;
    const int terms = uniform(0, 3);
    for (int k = 0; k < terms; ++k) {
      c += Coefficient(scalar(real_only), {static_cast<unsigned>(uniform(0, 2)),
                                           static_cast<unsigned>(uniform(0, 2)),
                                           static_cast<unsigned>(uniform(0, 1))});
    }
    return c;
  }

  /// Nonzero-biased coefficient with small support.
  Coefficient small_coefficient(bool real_only = false, bool hbar_free = false) {
    Coefficient c(scalar(real_only), {hbar_free ? 0u : static_cast<unsigned>(uniform(0, 1)),
                                      static_cast<unsigned>(uniform(0, 1)),
                                      static_cast<unsigned>(uniform(0, 1))});
    return c;
  }

  template <class Tag>
  LinearCombination<Tag> combination(unsigned max_degree, int max_terms, bool real_only = false,
                                     bool hbar_free = false) {
    LinearCombination<Tag> out;
    const int terms = uniform(0, max_terms);
    for (int k = 0; k < terms; ++k) {
      Exponents<Tag> m;
      unsigned budget = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
      for (unsigned* slot : {&m.a, &m.b, &m.c, &m.d}) {
        *slot = static_cast<unsigned>(uniform(0, static_cast<int>(budget)));
        budget -= *slot;
      }
      out.add_term(m, small_coefficient(real_only, hbar_free));
    }
    return out;
  }

  PhasePoly poly(unsigned max_degree = 3, int max_terms = 4, bool real_only = false) {
    return combination<PhaseTag>(max_degree, max_terms, real_only);
  }
  /// Classical observable: no hbar in any coefficient.
  PhasePoly classical_poly(unsigned max_degree = 3, int max_terms = 4) {
    return combination<PhaseTag>(max_degree, max_terms, false, true);
  }
  Operator op(unsigned max_degree = 3, int max_terms = 3) { return combination<OpTag>(max_degree, max_terms); }

  /// Polynomial in x, y only.
  PhasePoly position_poly(unsigned max_degree = 4, int max_terms = 4) {
    PhasePoly out;
    const int terms = uniform(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      const unsigned a = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree)));
      const unsigned b = static_cast<unsigned>(uniform(0, static_cast<int>(max_degree - a)));
      out.add_term({a, b, 0, 0}, small_coefficient());
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Word-rewriting oracle

enum class Letter : char { X = 'x', Y = 'y', PX = 'p', PY = 'q' };

inline int rank(char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'p': return 2;
    default: return 3;
  }
}

/// Normal-orders a word over {x, y, p(=px), q(=py)} by repeated adjacent
/// swaps, contracting p x -> x p - i hbar and q y -> y q - i hbar.
inline Operator normal_order_word(const std::string& word) {
  static thread_local std::map<std::string, Operator> memo;
  if (auto it = memo.find(word); it != memo.end()) return it->second;

  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    const char l = word[k];
    const char r = word[k + 1];
    if (rank(l) <= rank(r)) continue;
    std::string swapped = word;
    std::swap(swapped[k], swapped[k + 1]);
    Operator out = normal_order_word(swapped);
    if ((l == 'p' && r == 'x') || (l == 'q' && r == 'y')) {
      const std::string contracted = word.substr(0, k) + word.substr(k + 2);
      out += (-Coefficient::i() * Coefficient::hbar()) * normal_order_word(contracted);
    }
    memo.emplace(word, out);
    return out;
  }
  unsigned a = 0, b = 0, c = 0, d = 0;
  for (char ch : word) {
    switch (ch) {
      case 'x': ++a; break;
      case 'y': ++b; break;
      case 'p': ++c; break;
      default: ++d; break;
    }
  }
  Operator out = Operator::monomial({a, b, c, d});
  memo.emplace(word, out);
  return out;
}

inline std::string repeat(char c, unsigned n) { return std::string(n, c); }

/// Word-level quantization of x^r p^s (x slots), summing the ordered words of
/// the scheme's rule before normal-ordering each one separately.
inline Operator quantize_by_words(Scheme s, unsigned r, unsigned p_power) {
  Operator out;
  for (unsigned k = 0; k <= p_power; ++k) {
    Rational w;
    if (s == Scheme::BornJordan) {
      w = Rational(1, p_power + 1);
    } else {
      mpz_class two = 1;
      two <<= p_power;
      w = Rational(binomial(p_power, k), two);
    }
    w.canonicalize();
    out += Coefficient(w) * normal_order_word(repeat('p', p_power - k) + repeat('x', r) + repeat('p', k));
  }
  return out;
}

/// Operator built from an explicit word list; used to state expected values.
inline Operator word_op(const std::string& word, const Coefficient& c = Coefficient(1)) {
  return c * normal_order_word(word);
}

}  // namespace quantlab::testing
