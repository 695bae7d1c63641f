#include "quantlab/verify.hpp"

#include <algorithm>
#include <future>
#include <utility>

namespace quantlab {

namespace {

using Pair = std::pair<unsigned, unsigned>;

// Pairs where both quantizations of K coincide, and pairs where they differ.
constexpr Pair kCoincidingK[] = {{1, 1}, {2, 1}, {3, 1}};
constexpr Pair kDifferingK[] = {{4, 1}, {5, 1}, {6, 1}, {1, 4}, {3, 4}};

bool listed(const auto& pairs, unsigned m, unsigned n) {
  return std::any_of(std::begin(pairs), std::end(pairs),
                     [&](const Pair& p) { return p.first == m && p.second == n; });
}

VerificationRecord run_pipeline(const OscillatorParams& p, const PhasePoly& integral, Target target) {
  const PhasePoly H = hamiltonian(p);
  if (!poisson(H, integral).is_zero()) {
    throw ConsistencyError("classical bracket {H, " + std::string(target_name(target)) +
                           "} is nonzero for (m,n)=(" + std::to_string(p.m()) + "," +
                           std::to_string(p.n()) + ")");
  }

  VerificationRecord r;
  r.m = p.m();
  r.n = p.n();
  r.target = target;
  r.classical_bracket_zero = true;

  const Operator Hq = quantize(Scheme::Weyl, H);
  const Operator weyl = quantize(Scheme::Weyl, integral);
  const Operator bj = quantize(Scheme::BornJordan, integral);

  r.bj_minus_weyl = bj - weyl;
  r.bj_equals_weyl = r.bj_minus_weyl.is_zero();
  r.weyl_commutator = commutator(Hq, weyl);
  r.bj_commutator = commutator(Hq, bj);
  r.weyl_commutes = r.weyl_commutator.is_zero();
  r.bj_commutes = r.bj_commutator.is_zero();
  r.min_h_exp = r.bj_commutator.min_h_exp();
  r.min_w_exp = r.bj_commutator.min_w_exp();
  r.oracle_agreement = commutator_matches_action(Hq, weyl, r.weyl_commutator) &&
                       commutator_matches_action(Hq, bj, r.bj_commutator);
  return r;
}

}  // namespace

std::string_view target_name(Target t) {
  switch (t) {
    case Target::K: return "k";
    case Target::F1: return "f1";
    case Target::F2: return "f2";
  }
  return "?";
}

VerificationRecord verify_pair(unsigned m, unsigned n) {
  const OscillatorParams p(m, n);
  return run_pipeline(p, k_integral(p), Target::K);
}

VerificationRecord verify_ladder_pair(unsigned m, unsigned n, LadderIntegral which) {
  const OscillatorParams p(m, n);
  const auto [f1, f2] = ladder_integrals(p);
  const bool first = which == LadderIntegral::F1;
  VerificationRecord r = run_pipeline(p, first ? f1 : f2, first ? Target::F1 : Target::F2);
  r.ladder_equals_weyl = quantize_ladder(p, which) == quantize(Scheme::Weyl, first ? f1 : f2);
  return r;
}

VerificationRecord verify(unsigned m, unsigned n, Target target) {
  switch (target) {
    case Target::K: return verify_pair(m, n);
    case Target::F1: return verify_ladder_pair(m, n, LadderIntegral::F1);
    case Target::F2: return verify_ladder_pair(m, n, LadderIntegral::F2);
  }
  return verify_pair(m, n);
}

std::vector<VerificationRecord> sweep(unsigned max_sum, SweepTarget target) {
  if (max_sum < 2) throw std::invalid_argument("sweep: max_sum must be at least 2");

  std::vector<Target> targets;
  if (target == SweepTarget::K) {
    targets = {Target::K};
  } else {
    targets = {Target::F1, Target::F2};
  }

  std::vector<std::future<VerificationRecord>> jobs;
  for (unsigned sum = 2; sum <= max_sum; ++sum) {
    for (unsigned m = 1; m < sum; ++m) {
      for (Target t : targets) {
        jobs.push_back(std::async(std::launch::async, [=] { return verify(m, sum - m, t); }));
      }
    }
  }
  std::vector<VerificationRecord> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

std::vector<ClaimFailure> check_claims(const VerificationRecord& r) {
  std::vector<ClaimFailure> failures;
  auto fail = [&](std::string claim) { failures.push_back({r.m, r.n, r.target, std::move(claim)}); };

  if (!r.classical_bracket_zero) fail("classical_bracket_zero");
  if (!r.oracle_agreement) fail("oracle_agreement");
  if (!r.weyl_commutes) fail("weyl_commutes");
  if (r.bj_equals_weyl && r.bj_commutes != r.weyl_commutes) fail("bj_equals_weyl_implies_same_verdict");
  if (!r.bj_equals_weyl && r.bj_commutes) fail("bj_differs_and_fails_to_commute");

  if (r.target != Target::K) return failures;

  if (!r.bj_equals_weyl && !r.bj_commutes && (r.min_h_exp < 2 || r.min_w_exp < 1)) {
    fail("bj_commutator_has_hbar2_omega_factors");
  }
  if (listed(kCoincidingK, r.m, r.n) && !r.bj_equals_weyl) fail("bj_equals_weyl");
  if (listed(kDifferingK, r.m, r.n) && r.bj_equals_weyl) fail("bj_differs_from_weyl");
  if (r.m == 4 && r.n == 1) {
    const Coefficient i = Coefficient::i();
    const Coefficient h2w2 = Coefficient::hbar(2) * Coefficient::omega(2);
    if (r.bj_minus_weyl != Coefficient(32) * h2w2 * ops::x()) fail("bj_minus_weyl_equals_32_hbar2_omega2_x");
    const Operator expected = (Coefficient(-32) * i * Coefficient::hbar()) * h2w2 * ops::px();
    if (r.bj_commutator != expected) fail("bj_commutator_equals_minus_32i_hbar3_omega2_px");
  }
  return failures;
}

}  // namespace quantlab
