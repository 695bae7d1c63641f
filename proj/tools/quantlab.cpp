// quantlab: Born-Jordan vs Weyl quantization of oscillator first integrals.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "quantlab/parser.hpp"
#include "quantlab/report.hpp"

namespace {

using namespace quantlab;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

const std::map<std::string, Target> kTargets{{"k", Target::K}, {"f1", Target::F1}, {"f2", Target::F2}};
const std::map<std::string, SweepTarget> kSweepTargets{{"k", SweepTarget::K}, {"f", SweepTarget::F}};
const std::map<std::string, Scheme> kSchemes{{"bj", Scheme::BornJordan}, {"weyl", Scheme::Weyl}};
const std::map<std::string, ReportFormat> kFormats{
    {"text", ReportFormat::Text}, {"json", ReportFormat::Json}, {"latex", ReportFormat::Latex}};

int run_verify(unsigned m, unsigned n, Target target, ReportFormat format) {
  const VerificationRecord r = verify(m, n, target);
  switch (format) {
    case ReportFormat::Json: std::cout << record_to_json(r).dump(2) << "\n"; break;
    case ReportFormat::Latex: std::cout << record_to_latex(r); break;
    case ReportFormat::Text: std::cout << record_to_text(r); break;
  }
  return check_claims(r).empty() ? kOk : kVerificationFailure;
}

int run_sweep(unsigned max_sum, SweepTarget target, ReportFormat format) {
  const auto records = sweep(max_sum, target);
  if (format == ReportFormat::Json) {
    std::cout << sweep_to_json(max_sum, target, records).dump(2) << "\n";
  } else {
    std::cout << sweep_to_text(max_sum, target, records);
  }
  for (const auto& r : records) {
    if (!check_claims(r).empty()) return kVerificationFailure;
  }
  return kOk;
}

void print_operator(const std::string& label, const Operator& A, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json:
      std::cout << nlohmann::json{{label, operator_to_json(A)}}.dump(2) << "\n";
      break;
    case ReportFormat::Latex:
      std::cout << render_latex(to_diff_form(A)) << "\n";
      break;
    case ReportFormat::Text:
      std::cout << label << " (p-form) = " << render(A) << "\n";
      std::cout << label << " (d-form) = " << render(to_diff_form(A)) << "\n";
      break;
  }
}

int run_quantize(Scheme scheme, const std::string& expr, ReportFormat format) {
  const PhasePoly f = parse_poly(expr);
  print_operator(std::string(scheme_name(scheme)), quantize(scheme, f), format);
  return kOk;
}

int run_commutator(Scheme scheme, unsigned m, unsigned n, Target target, ReportFormat format) {
  const OscillatorParams p(m, n);
  PhasePoly integral;
  switch (target) {
    case Target::K: integral = k_integral(p); break;
    case Target::F1: integral = ladder_integrals(p).first; break;
    case Target::F2: integral = ladder_integrals(p).second; break;
  }
  const Operator c = commutator(quantize(scheme, hamiltonian(p)), quantize(scheme, integral));
  print_operator("commutator", c, format);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Born-Jordan and Weyl quantization of anisotropic oscillator integrals"};
  app.require_subcommand(1);

  unsigned m = 1;
  unsigned n = 1;
  unsigned max_sum = 8;
  Target target = Target::K;
  SweepTarget sweep_target = SweepTarget::K;
  Scheme scheme = Scheme::Weyl;
  ReportFormat format = ReportFormat::Text;
  std::string expr;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or latex")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--m", m, "m >= 1")->required()->check(CLI::PositiveNumber);
    sub->add_option("--n", n, "n >= 1")->required()->check(CLI::PositiveNumber);
  };

  auto* verify_cmd = app.add_subcommand("verify", "Check one (m,n) pair");
  add_pair(verify_cmd);
  verify_cmd->add_option("--target", target, "k, f1 or f2")
      ->transform(CLI::CheckedTransformer(kTargets, CLI::ignore_case));
  add_format(verify_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Check every pair with m + n <= S");
  sweep_cmd->add_option("--max-sum", max_sum, "S >= 2")->required()->check(CLI::Range(2u, 64u));
  sweep_cmd->add_option("--target", sweep_target, "k or f")
      ->transform(CLI::CheckedTransformer(kSweepTargets, CLI::ignore_case));
  add_format(sweep_cmd);

  auto* quantize_cmd = app.add_subcommand("quantize", "Quantize a classical expression");
  quantize_cmd->add_option("--scheme", scheme, "bj or weyl")
      ->required()
      ->transform(CLI::CheckedTransformer(kSchemes, CLI::ignore_case));
  quantize_cmd->add_option("--expr", expr, "e.g. \"x*py^2 - omega^2*x^3\"")->required();
  add_format(quantize_cmd);

  auto* commutator_cmd = app.add_subcommand("commutator", "[H, Q(integral)] for one pair");
  commutator_cmd->add_option("--scheme", scheme, "bj or weyl")
      ->required()
      ->transform(CLI::CheckedTransformer(kSchemes, CLI::ignore_case));
  add_pair(commutator_cmd);
  commutator_cmd->add_option("--target", target, "k, f1 or f2")
      ->transform(CLI::CheckedTransformer(kTargets, CLI::ignore_case));
  add_format(commutator_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*verify_cmd) return run_verify(m, n, target, format);
    if (*sweep_cmd) return run_sweep(max_sum, sweep_target, format);
    if (*quantize_cmd) return run_quantize(scheme, expr, format);
    if (*commutator_cmd) return run_commutator(scheme, m, n, target, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConsistencyError& e) {
    std::cerr << nlohmann::json{{"failures", {{{"claim", "classical_bracket_zero"}, {"detail", e.what()}}}}}
                     .dump(2)
              << "\n";
    return kVerificationFailure;
  }
  return kUsageError;
}
