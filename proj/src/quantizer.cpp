#include "quantlab/quantizer.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace quantlab {

std::string_view scheme_name(Scheme s) {
  return s == Scheme::BornJordan ? "bj" : "weyl";
}

Operator quantize_one_index(Scheme s, unsigned r, unsigned p_power) {
  using Key = std::tuple<Scheme, unsigned, unsigned>;
  static std::mutex cache_mutex;
  static std::map<Key, Operator> cache;
  const Key key{s, r, p_power};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const Operator positions = Operator::monomial({r, 0, 0, 0});
  Operator sum;
  for (unsigned k = 0; k <= p_power; ++k) {
    Rational weight;
    if (s == Scheme::BornJordan) {
      weight = Rational(1, p_power + 1);
    } else {
      mpz_class two_s = 1;
      two_s <<= p_power;
      weight = Rational(binomial(p_power, k), two_s);
    }
    weight.canonicalize();
    const Operator left = Operator::monomial({0, 0, p_power - k, 0}, Coefficient(weight));
    const Operator right = Operator::monomial({0, 0, k, 0});
    sum += left * positions * right;
  }

  std::lock_guard lock(cache_mutex);
  cache.emplace(key, sum);
  return sum;
}

namespace {

/// Moves an x/p_x operator into the y/p_y slots.
Operator to_y_slots(const Operator& A) {
  Operator out;
  for (const auto& [m, c] : A.terms()) out.add_term({0, m.a, 0, m.c}, c);
  return out;
}

}  // namespace

Operator quantize_monomial(Scheme s, const PhaseMono& m) {
  return quantize_one_index(s, m.a, m.c) * to_y_slots(quantize_one_index(s, m.b, m.d));
}

Operator quantize(Scheme s, const PhasePoly& f) {
  Operator out;
  for (const auto& [m, c] : f.terms()) out += c * quantize_monomial(s, m);
  return out;
}

Operator quantize_ladder(const OscillatorParams& p, LadderIntegral which) {
  const Coefficient i = Coefficient::i();
  const Operator b1 = ops::px() - (i * p.omega1()) * ops::x();
  const Operator b1c = ops::px() + (i * p.omega1()) * ops::x();
  const Operator b2 = ops::py() - (i * p.omega2()) * ops::y();
  const Operator b2c = ops::py() + (i * p.omega2()) * ops::y();

  const Operator forward = pow(b1, p.n()) * pow(b2c, p.m());
  const Operator backward = pow(b1c, p.n()) * pow(b2, p.m());
  const Coefficient half = Coefficient::ratio(1, 2);
  if (which == LadderIntegral::F1) return half * (forward + backward);
  return (-half * i) * (forward - backward);
}

}  // namespace quantlab
