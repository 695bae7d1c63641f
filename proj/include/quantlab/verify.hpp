#pragma once

// Verification pipelines: quantize a first integral under both schemes,
// commute with the quantized Hamiltonian, cross-check every commutator
// against the differential-operator action, and compare with the reported
// behaviour of each (m, n) pair.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quantlab/quantizer.hpp"

namespace quantlab {

enum class Target { K, F1, F2 };
enum class SweepTarget { K, F };

std::string_view target_name(Target t);

struct VerificationRecord {
  unsigned m = 1;
  unsigned n = 1;
  Target target = Target::K;
  bool classical_bracket_zero = false;
  bool bj_equals_weyl = false;
  bool weyl_commutes = false;
  bool bj_commutes = false;
  Operator bj_minus_weyl;
  Operator weyl_commutator;
  Operator bj_commutator;
  /// Over bj_commutator terms; 0 when it vanishes.
  unsigned min_h_exp = 0;
  unsigned min_w_exp = 0;
  bool oracle_agreement = false;
  /// Ladder targets only: whether the ladder-operator quantization equals
  /// the Weyl quantization of the classical integral.
  std::optional<bool> ladder_equals_weyl;
};

/// Raised when a classical integral fails to Poisson-commute with H.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Runs the pipeline on K_{m,n}. Throws std::invalid_argument for m or n zero.
VerificationRecord verify_pair(unsigned m, unsigned n);

/// Runs the pipeline on the ladder integral F1 or F2.
VerificationRecord verify_ladder_pair(unsigned m, unsigned n, LadderIntegral which);

VerificationRecord verify(unsigned m, unsigned n, Target target);

/// Every pair 1 <= m, n with m + n <= max_sum, ordered by m + n then m. For
/// SweepTarget::F each pair contributes an F1 record followed by an F2
/// record. Pairs are evaluated concurrently; order is deterministic.
std::vector<VerificationRecord> sweep(unsigned max_sum, SweepTarget target);

struct ClaimFailure {
  unsigned m;
  unsigned n;
  Target target;
  std::string claim;
};

/// Checks a record against the behaviour reported for its pair:
///  - classical bracket zero and oracle agreement;
///  - the Weyl operator commutes with H;
///  - when BJ differs from Weyl it does not commute (and, for K, every
///    commutator term carries hbar^2 and omega);
///  - the listed coincidence / non-coincidence pairs and the exact (4,1)
///    operators.
std::vector<ClaimFailure> check_claims(const VerificationRecord& r);

}  // namespace quantlab
