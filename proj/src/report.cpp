#include "quantlab/report.hpp"

#include <sstream>

namespace quantlab {

using nlohmann::json;

namespace {

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string target_label(Target t) {
  switch (t) {
    case Target::K: return "K";
    case Target::F1: return "F1";
    case Target::F2: return "F2";
  }
  return "?";
}

std::vector<ClaimFailure> sweep_failures(const std::vector<VerificationRecord>& records) {
  std::vector<ClaimFailure> all;
  for (const auto& r : records) {
    auto f = check_claims(r);
    all.insert(all.end(), f.begin(), f.end());
  }
  return all;
}

}  // namespace

json coefficient_to_json(const Coefficient& c) {
  json terms = json::array();
  for (const auto& [mono, s] : c.terms()) {
    terms.push_back({{"h", mono.h},
                     {"w", mono.w},
                     {"r", mono.r},
                     {"re_num", integer_json(s.re.get_num())},
                     {"re_den", integer_json(s.re.get_den())},
                     {"im_num", integer_json(s.im.get_num())},
                     {"im_den", integer_json(s.im.get_den())}});
  }
  return {{"terms", terms}};
}

json operator_to_json(const Operator& A) {
  json out = json::array();
  for (const auto& [m, c] : A.terms()) {
    out.push_back({{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}, {"coeff", coefficient_to_json(c)}});
  }
  return out;
}

json polynomial_to_json(const PhasePoly& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) {
    out.push_back({{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}, {"coeff", coefficient_to_json(c)}});
  }
  return out;
}

json failures_to_json(const std::vector<ClaimFailure>& failures) {
  json out = json::array();
  for (const auto& f : failures) {
    out.push_back({{"m", f.m}, {"n", f.n}, {"target", target_name(f.target)}, {"claim", f.claim}});
  }
  return out;
}

json record_to_json(const VerificationRecord& r) {
  json operators = {{"bj_equals_weyl", r.bj_equals_weyl},
                    {"bj_minus_weyl", operator_to_json(r.bj_minus_weyl)}};
  if (r.ladder_equals_weyl) operators["ladder_equals_weyl"] = *r.ladder_equals_weyl;
  return {
      {"params", {{"m", r.m}, {"n", r.n}}},
      {"target", target_name(r.target)},
      {"classical", {{"bracket_zero", r.classical_bracket_zero}}},
      {"operators", operators},
      {"commutators",
       {{"weyl", operator_to_json(r.weyl_commutator)},
        {"bj", operator_to_json(r.bj_commutator)},
        {"weyl_commutes", r.weyl_commutes},
        {"bj_commutes", r.bj_commutes},
        {"min_h_exp", r.min_h_exp},
        {"min_w_exp", r.min_w_exp}}},
      {"oracle", {{"agreement", r.oracle_agreement}}},
      {"failures", failures_to_json(check_claims(r))},
  };
}

json sweep_to_json(unsigned max_sum, SweepTarget target,
                   const std::vector<VerificationRecord>& records) {
  json list = json::array();
  bool all_weyl = true;
  for (const auto& r : records) {
    list.push_back(record_to_json(r));
    all_weyl = all_weyl && r.weyl_commutes;
  }
  return {
      {"max_sum", max_sum},
      {"target", target == SweepTarget::K ? "k" : "f"},
      {"records", list},
      {"evidence",
       {{"weyl_commutes_for_every_pair", all_weyl},
        {"pairs_checked", records.size()},
        {"probative", false},
        {"note", "finite exact computation; supports but does not prove that Weyl-quantized "
                 "integrals always commute with the Hamiltonian"}}},
      {"failures", failures_to_json(sweep_failures(records))},
  };
}

std::string record_to_text(const VerificationRecord& r) {
  std::ostringstream os;
  os << "(m,n) = (" << r.m << "," << r.n << ")  target " << target_label(r.target) << "\n";
  os << "  classical bracket {H, " << target_label(r.target) << "} = 0 : "
     << yes_no(r.classical_bracket_zero) << "\n";
  os << "  BJ == Weyl                  : " << yes_no(r.bj_equals_weyl) << "\n";
  if (!r.bj_equals_weyl) {
    os << "  BJ - Weyl                   : " << render(r.bj_minus_weyl) << "\n";
    os << "                    (d-form)  : " << render(to_diff_form(r.bj_minus_weyl)) << "\n";
  }
  if (r.ladder_equals_weyl) {
    os << "  ladder == Weyl              : " << yes_no(*r.ladder_equals_weyl) << "\n";
  }
  os << "  [H, Weyl] = " << render(r.weyl_commutator) << "\n";
  os << "  [H, BJ]   = " << render(r.bj_commutator) << "\n";
  os << "   (d-form) = " << render(to_diff_form(r.bj_commutator)) << "\n";
  os << "  min hbar / omega exponent in [H, BJ] : " << r.min_h_exp << " / " << r.min_w_exp << "\n";
  os << "  action oracle agreement     : " << yes_no(r.oracle_agreement) << "\n";
  const auto failures = check_claims(r);
  if (failures.empty()) {
    os << "  claims: all hold\n";
  } else {
    for (const auto& f : failures) os << "  FAILED claim: " << f.claim << "\n";
  }
  return os.str();
}

std::string record_to_latex(const VerificationRecord& r) {
  std::ostringstream os;
  const std::string t = target_label(r.target);
  const std::string sub = "_{" + std::to_string(r.m) + "," + std::to_string(r.n) + "}";
  os << "% (m,n) = (" << r.m << "," << r.n << "), target " << t << "\n";
  os << "\\begin{gather*}\n";
  os << "\\hat " << t << sub << "^{\\rm BJ} - \\hat " << t << sub
     << "^{\\rm W} = " << render_latex(to_diff_form(r.bj_minus_weyl)) << ",\\\\\n";
  os << "\\big[\\hat H" << sub << ", \\hat " << t << sub
     << "^{\\rm W}\\big] = " << render_latex(to_diff_form(r.weyl_commutator)) << ", \\qquad\n";
  os << "\\big[\\hat H" << sub << ", \\hat " << t << sub
     << "^{\\rm BJ}\\big] = " << render_latex(to_diff_form(r.bj_commutator)) << ".\n";
  os << "\\end{gather*}\n";
  return os.str();
}

std::string sweep_to_text(unsigned max_sum, SweepTarget target,
                          const std::vector<VerificationRecord>& records) {
  std::ostringstream os;
  os << "sweep m + n <= " << max_sum << ", target " << (target == SweepTarget::K ? "K" : "F1/F2")
     << "\n";
  os << "   m   n  tgt  BJ==W  W-commutes  BJ-commutes  min_h  min_w  oracle\n";
  bool all_weyl = true;
  for (const auto& r : records) {
    char line[128];
    std::snprintf(line, sizeof line, "%4u%4u  %-3s  %-5s  %-10s  %-11s  %5u  %5u  %s\n", r.m, r.n,
                  target_label(r.target).c_str(), yes_no(r.bj_equals_weyl), yes_no(r.weyl_commutes),
                  yes_no(r.bj_commutes), r.min_h_exp, r.min_w_exp, yes_no(r.oracle_agreement));
    os << line;
    all_weyl = all_weyl && r.weyl_commutes;
  }
  os << "Weyl commutes for every pair checked: " << yes_no(all_weyl)
     << " (evidence from a finite exact computation, not a proof)\n";
  const auto failures = sweep_failures(records);
  if (failures.empty()) {
    os << "claims: all hold\n";
  } else {
    for (const auto& f : failures) {
      os << "FAILED claim (" << f.m << "," << f.n << ") " << target_name(f.target) << ": " << f.claim
         << "\n";
    }
  }
  return os.str();
}

}  // namespace quantlab
