#pragma once

// Report emission. JSON is the canonical machine format; text and LaTeX are
// views over the same record.

#include <string>
#include <vector>

#include <json.hpp>

#include "quantlab/verify.hpp"

namespace quantlab {

enum class ReportFormat { Text, Json, Latex };

/// {terms:[{h,w,r,re_num,re_den,im_num,im_den}]}; integers that fit in a
/// signed 64-bit value are numbers, larger ones decimal strings.
nlohmann::json coefficient_to_json(const Coefficient& c);

/// [{a,b,c,d,coeff}] in graded-lex order, largest first.
nlohmann::json operator_to_json(const Operator& A);
nlohmann::json polynomial_to_json(const PhasePoly& f);

nlohmann::json failures_to_json(const std::vector<ClaimFailure>& failures);

/// params / classical / operators / commutators / oracle / failures.
nlohmann::json record_to_json(const VerificationRecord& r);
nlohmann::json sweep_to_json(unsigned max_sum, SweepTarget target,
                             const std::vector<VerificationRecord>& records);

std::string record_to_text(const VerificationRecord& r);
std::string record_to_latex(const VerificationRecord& r);
std::string sweep_to_text(unsigned max_sum, SweepTarget target,
                          const std::vector<VerificationRecord>& records);

}  // namespace quantlab
