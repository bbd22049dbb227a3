#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "compseq/certificate_json.hpp"
#include "compseq/certify.hpp"
#include "compseq/complete.hpp"
#include "compseq/counts.hpp"
#include "compseq/errors.hpp"
#include "compseq/oracle.hpp"
#include "compseq/parse.hpp"

namespace compseq::cli {

namespace {

struct JobConfig {
  std::string poly_text;
  std::int64_t j0 = 1;
  std::uint64_t reps = 1;
  std::int64_t offset = 3;
  std::optional<std::int64_t> initial_k;
  std::int64_t max_k = std::int64_t{1} << 31;
  std::uint64_t memory_budget_bytes = std::uint64_t{2} << 30;
  std::string format = "text";
  std::string out_path;
  std::string certificate_path;
  std::int64_t k = 0;
  std::int64_t n = 0;
};

int report_error(std::ostream& err, int code, std::string_view category, const std::string& detail) {
  std::string line = detail;
  for (auto& c : line) {
    if (c == '\n') c = ' ';
  }
  err << "error: " << category << ": " << line << "\n";
  return code;
}

std::string infeasible_detail(const BudgetExceeded& e) {
  std::ostringstream s;
  s << e.what() << "; required table size K=" << e.required_k << " (" << e.required_bytes << " bytes, budget "
    << e.budget_bytes << " bytes)";
  if (e.certificate_lower_bound) {
    s << "; any certificate needs a table of at least " << e.certificate_lower_bound->get_str() << " entries";
  }
  return s.str();
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  return static_cast<bool>(f);
}

void add_poly_options(CLI::App* cmd, JobConfig& cfg) {
  cmd->add_option("--poly", cfg.poly_text, "Polynomial in j, e.g. \"j^2\" or \"binomial(j+3,3)\"")->required();
  cmd->add_option("--j0", cfg.j0, "Smallest index j of the sequence (default 1)");
}

void add_reps_option(CLI::App* cmd, JobConfig& cfg) {
  cmd->add_option("--reps", cfg.reps, "Required number of representations C (default 1)")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
}

void add_memory_option(CLI::App* cmd, JobConfig& cfg) {
  cmd->add_option("--memory", cfg.memory_budget_bytes, "Memory budget per count table in bytes (default 2 GiB)");
}

void print_report_text(std::ostream& out, const CompletenessReport& r) {
  out << "complete = " << (r.verdict ? "yes" : "no") << "\n";
  out << "degree = " << r.degree << "\n";
  out << "value gcd = " << r.value_gcd.get_str() << "\n";
  out << "positive from j = " << (r.positivity_from ? std::to_string(*r.positivity_from) : "none") << "\n";
  out << "strictly increasing from j = "
      << (r.strictly_increasing_from ? std::to_string(*r.strictly_increasing_from) : "none") << "\n";
  for (const auto& f : r.failures) out << "failure: " << f << "\n";
}

int cmd_check(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const Polynomial p = parse_poly(cfg.poly_text);
  const auto report = is_complete(p, cfg.j0);
  if (cfg.format == "json") {
    out << report_to_json(report) << "\n";
  } else {
    print_report_text(out, report);
  }
  if (!report.verdict) return report_error(err, kNotComplete, "not-complete", report.failures.front());
  return kSuccess;
}

int cmd_counts(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const Polynomial p = parse_poly(cfg.poly_text);
  if (auto report = is_complete(p, cfg.j0); !report.verdict) throw NotComplete(std::move(report));
  CountOptions options;
  options.memory_budget = cfg.memory_budget_bytes;
  const CountTable table = count_table(p, cfg.j0, cfg.reps, cfg.k, options);

  std::ostringstream buf;
  buf << "# cap=" << table.cap() << "\n";
  for (std::int64_t n = 0; n <= table.k(); ++n) buf << n << '\t' << table[n] << '\n';
  if (cfg.out_path.empty()) {
    out << buf.str();
  } else if (!write_file(cfg.out_path, buf.str())) {
    return report_error(err, kUsage, "io", "cannot write " + cfg.out_path);
  }
  return kSuccess;
}

int cmd_lambda(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  const Polynomial p = parse_poly(cfg.poly_text);
  ProveConfig prove;
  prove.offset = cfg.offset;
  prove.initial_k = cfg.initial_k;
  prove.max_k = cfg.max_k;
  prove.memory_budget = cfg.memory_budget_bytes;
  const ProofCertificate cert = prove_lambda(p, cfg.j0, cfg.reps, prove);
  const std::string json = certificate_to_json(cert);

  if (!cfg.certificate_path.empty() && !write_file(cfg.certificate_path, json + "\n")) {
    return report_error(err, kUsage, "io", "cannot write " + cfg.certificate_path);
  }
  if (cfg.format == "json") {
    out << json << "\n";
    return kSuccess;
  }
  out << "polynomial = " << cert.polynomial << "\n";
  out << "j0 = " << cert.j0 << "\n";
  out << "reps = " << cert.reps << "\n";
  if (cert.lambda) {
    out << "lambda = " << *cert.lambda << "\n";
  } else {
    out << "lambda = none (every n >= 0 has at least " << cert.reps << " representations)\n";
  }
  out << "offset = " << cert.offset << "\n";
  out << "n1 = " << *cert.n1 << "\n";
  out << "base cases = " << (cert.lambda.value_or(-1) + 1) << " .. " << cert.base_case_max.get_str() << "\n";
  out << "certificate = " << (cert.verified ? "verified" : "unverified") << "\n";
  return kSuccess;
}

int cmd_prove(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream f(cfg.certificate_path, std::ios::binary);
  if (!f) return report_error(err, kUsage, "io", "cannot read " + cfg.certificate_path);
  std::stringstream text;
  text << f.rdbuf();

  ProofCertificate cert;
  try {
    cert = certificate_from_json(text.str());
  } catch (const CertificateFormatError& e) {
    return report_error(err, kVerificationFailed, "verification-failed", e.what());
  }
  ProveConfig prove;
  prove.max_k = cfg.max_k;
  prove.memory_budget = cfg.memory_budget_bytes;
  const auto result = verify_certificate(cert, prove);
  if (!result) return report_error(err, kVerificationFailed, "verification-failed", result.failed_clause);
  out << render_proof(cert);
  return kSuccess;
}

int cmd_oracle(const JobConfig& cfg, std::ostream& out) {
  const Polynomial p = parse_poly(cfg.poly_text);
  out << rep_count_exact(p, cfg.j0, cfg.n).get_str() << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Largest integers not representable as sums of distinct polynomial values, with proof certificates",
               args.empty() ? "compseq" : args.front()};
  app.require_subcommand(1);
  JobConfig cfg;

  auto* check = app.add_subcommand("check", "Report whether p(j0), p(j0+1), ... is a complete sequence");
  add_poly_options(check, cfg);
  check->add_option("--format", cfg.format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));

  auto* counts = app.add_subcommand("counts", "Dump capped representation counts for n = 0..K");
  add_poly_options(counts, cfg);
  add_reps_option(counts, cfg);
  counts->add_option("--k", cfg.k, "Largest n in the table")->required()->check(CLI::NonNegativeNumber);
  counts->add_option("--out", cfg.out_path, "Write the table to this file instead of stdout");
  add_memory_option(counts, cfg);

  auto* lambda = app.add_subcommand("lambda", "Compute lambda and write a verified proof certificate");
  add_poly_options(lambda, cfg);
  add_reps_option(lambda, cfg);
  lambda->add_option("--offset", cfg.offset, "Offset t in y = (y - p(N-t)) + p(N-t) (default 3)")
      ->check(CLI::PositiveNumber);
  lambda->add_option("--initial-k", cfg.initial_k, "First exploration table size")->check(CLI::PositiveNumber);
  lambda->add_option("--max-k", cfg.max_k, "Largest table size to attempt (default 2^31)")->check(CLI::PositiveNumber);
  add_memory_option(lambda, cfg);
  lambda->add_option("--format", cfg.format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
  lambda->add_option("--certificate", cfg.certificate_path, "Write the certificate (JSON) to this file");

  auto* prove = app.add_subcommand("prove", "Verify a certificate file and print the proof");
  prove->add_option("--certificate", cfg.certificate_path, "Certificate file to verify")->required();
  prove->add_option("--max-k", cfg.max_k, "Largest table size to recompute (default 2^31)")->check(CLI::PositiveNumber);
  add_memory_option(prove, cfg);

  auto* oracle = app.add_subcommand("oracle", "Exact representation count of n by direct enumeration");
  add_poly_options(oracle, cfg);
  oracle->add_option("--n", cfg.n, "Target integer")->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << sub->help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return report_error(err, kUsage, "usage", e.what());
  }

  try {
    if (check->parsed()) return cmd_check(cfg, out, err);
    if (counts->parsed()) return cmd_counts(cfg, out, err);
    if (lambda->parsed()) return cmd_lambda(cfg, out, err);
    if (prove->parsed()) return cmd_prove(cfg, out, err);
    return cmd_oracle(cfg, out);
  } catch (const ParseError& e) {
    return report_error(err, kUsage, "parse", e.what());
  } catch (const NotComplete& e) {
    return report_error(err, kNotComplete, "not-complete", e.what());
  } catch (const BudgetExceeded& e) {
    return report_error(err, kInfeasible, "infeasible", infeasible_detail(e));
  } catch (const NotEventuallyPositive& e) {
    return report_error(err, kInfeasible, "infeasible",
                        std::string("no induction cutoff: ") + e.what() + "; try a larger --offset");
  } catch (const LimitExceeded& e) {
    return report_error(err, kInfeasible, "infeasible", e.what());
  } catch (const NonIntegerValue& e) {
    return report_error(err, kNotComplete, "not-complete", e.what());
  } catch (const std::invalid_argument& e) {
    return report_error(err, kNotComplete, "not-complete", e.what());
  } catch (const std::exception& e) {
    return report_error(err, kUsage, "usage", e.what());
  }
}

}  // namespace compseq::cli
