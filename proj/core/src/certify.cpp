#include "compseq/certify.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "compseq/errors.hpp"
#include "compseq/parse.hpp"

namespace compseq {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += sep;
    out += parts[i];
  }
  return out;
}

CountOptions table_options(const ProveConfig& cfg, bool force_counters = false) {
  CountOptions o;
  o.memory_budget = cfg.memory_budget;
  o.force_counters = force_counters;
  return o;
}

// Any certificate must cover every n up to p(n1), and n1 can only grow with
// lambda, so a known deficient n gives a lower bound on the table it needs.
void attach_lower_bound(BudgetExceeded& e, const Polynomial& p, std::int64_t j0, std::int64_t deficient,
                        std::int64_t t) {
  Integer bound = to_integer(deficient) + 1;
  try {
    const auto w = cutoff(p, j0, deficient, t);
    bound = std::max(bound, Integer(eval_int(p, to_integer(w.n1)) + 1));
  } catch (const NotEventuallyPositive&) {
  }
  e.certificate_lower_bound = bound;
}

BudgetExceeded max_k_exceeded(std::int64_t required_k, std::uint64_t reps, const ProveConfig& cfg) {
  return BudgetExceeded("table size " + std::to_string(required_k) + " exceeds max_k " + std::to_string(cfg.max_k),
                        required_k, table_bytes(reps, required_k), cfg.memory_budget);
}

void require_complete(const Polynomial& p, std::int64_t j0) {
  auto report = is_complete(p, j0);
  if (!report.verdict) throw NotComplete(std::move(report));
}

std::int64_t checked_k(const Integer& k) {
  return k.fits_slong_p() ? k.get_si() : std::numeric_limits<std::int64_t>::max();
}

Verification fail(std::string clause) { return {false, std::move(clause)}; }

Verification check_clauses(const ProofCertificate& cert, const ProveConfig& cfg) {
  Polynomial p;
  try {
    p = parse_poly(cert.polynomial);
  } catch (const std::exception& e) {
    return fail(std::string("polynomial does not parse: ") + e.what());
  }
  if (render_poly(p) != cert.polynomial) return fail("polynomial is not in canonical form");
  if (cert.reps < 1) return fail("reps must be >= 1");
  if (cert.offset < 1) return fail("offset must be >= 1");
  const auto report = is_complete(p, cert.j0);
  if (!report.verdict) return fail("sequence is not complete: " + join(report.failures, "; "));
  if (cert.lambda && *cert.lambda < 0) return fail("lambda must be nonnegative");
  if (!cert.n1) return fail("cutoff n1 is missing");

  const std::int64_t n0 = cert.lambda.value_or(-1);
  CutoffWitness w;
  try {
    w = cutoff(p, cert.j0, n0, cert.offset);
  } catch (const std::exception& e) {
    return fail(std::string("cutoff cannot be derived: ") + e.what());
  }
  if (render_poly(w.d1) != cert.d1) return fail("d1 does not match p(N) - p(N-t) - lambda");
  if (render_poly(w.d2) != cert.d2) return fail("d2 does not match 2 p(N-t) - p(N+1)");
  if (w.root_bound != cert.root_bound) return fail("root bound does not match");
  if (w.n1 != *cert.n1) return fail("n1 is not the positivity cutoff of d1 and d2");
  if (eval_int(p, to_integer(w.n1)) != cert.base_case_max) return fail("base_case_max is not p(n1)");
  if (cert.lambda && cert.base_case_max <= *cert.lambda) return fail("base_case_max must exceed lambda");
  if (cert.base_case_max != cert.k_explored) return fail("k_explored must equal base_case_max");
  if (cert.k_explored > cfg.max_k) throw max_k_exceeded(cert.k_explored, cert.reps, cfg);

  const CountTable table = count_table(p, cert.j0, cert.reps, cert.k_explored, table_options(cfg, true));
  if (cert.lambda) {
    const auto at_lambda = table[*cert.lambda];
    if (at_lambda >= cert.reps) return fail("lambda has at least reps representations");
    if (at_lambda != cert.lambda_deficiency) return fail("lambda_deficiency does not match the count at lambda");
  } else if (cert.lambda_deficiency != cert.reps) {
    return fail("lambda_deficiency must equal reps when lambda is absent");
  }
  if (auto bad = table.largest_deficient_in(n0 + 1, cert.k_explored)) {
    return fail("base case " + std::to_string(*bad) + " has fewer than reps representations");
  }
  return {true, {}};
}

}  // namespace

NotComplete::NotComplete(CompletenessReport report)
    : std::runtime_error("not complete: " + join(report.failures, "; ")), report_(std::move(report)) {}

std::int64_t default_initial_k(const Polynomial& p, std::int64_t j0, std::int64_t max_k) {
  const Integer k = std::max(Integer(1024), Integer(4 * eval_int(p, to_integer(j0 + 8))));
  return k > max_k ? max_k : to_int64(k);
}

Exploration explore(const Polynomial& p, std::int64_t j0, std::uint64_t reps, const ProveConfig& cfg) {
  std::int64_t k = cfg.initial_k ? std::min(*cfg.initial_k, cfg.max_k) : default_initial_k(p, j0, cfg.max_k);
  std::optional<std::int64_t> last_deficient;
  for (;;) {
    std::optional<CountTable> table;
    try {
      table = count_table(p, j0, reps, k, table_options(cfg));
    } catch (BudgetExceeded& e) {
      if (last_deficient) attach_lower_bound(e, p, j0, *last_deficient, cfg.offset);
      throw;
    }
    const auto candidate = largest_deficient(*table);
    if (!candidate || *candidate <= k / 2) return {candidate, std::move(*table)};
    last_deficient = candidate;
    if (k >= cfg.max_k) {
      auto e = max_k_exceeded(k > cfg.max_k / 2 ? 2 * k : cfg.max_k, reps, cfg);
      attach_lower_bound(e, p, j0, *candidate, cfg.offset);
      throw e;
    }
    k = std::min(2 * k, cfg.max_k);
  }
}

CutoffWitness cutoff(const Polynomial& p, std::int64_t j0, std::int64_t n0, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("offset must be >= 1");
  const Polynomial back = shift(p, -t);
  CutoffWitness w;
  w.offset_t = t;
  w.d1 = p - back - Polynomial::constant(Rational(to_integer(n0)));
  w.d2 = scale(back, 2) - shift(p, 1);
  // d1 >= 0 over the integers is d1 + 1 > 0 when d1 is integer-valued.
  const Polynomial d1_strict = w.d1 + Polynomial::constant(1);
  const std::int64_t floor = j0 + t;
  w.n1 = std::max(positivity_cutoff(d1_strict, floor), positivity_cutoff(w.d2, floor));
  w.root_bound = std::max(positive_root_bound(d1_strict), positive_root_bound(w.d2));
  return w;
}

bool base_case_check(const CountTable& table, std::int64_t n0, const Integer& base_case_max, std::uint64_t reps) {
  if (base_case_max > table.k()) {
    throw TableTooShort("table stops at " + std::to_string(table.k()) + " but base cases reach " +
                        base_case_max.get_str());
  }
  if (reps != table.cap()) throw std::invalid_argument("table cap differs from reps");
  return !table.largest_deficient_in(n0 + 1, to_int64(base_case_max));
}

ProofCertificate prove_lambda(const Polynomial& p, std::int64_t j0, std::uint64_t reps, const ProveConfig& cfg) {
  require_complete(p, j0);
  auto [candidate, table] = explore(p, j0, reps, cfg);

  CutoffWitness w;
  Integer base_case_max;
  for (;;) {
    const std::int64_t n0 = candidate.value_or(-1);
    w = cutoff(p, j0, n0, cfg.offset);
    base_case_max = eval_int(p, to_integer(w.n1));
    if (base_case_max > table.k()) {
      const std::int64_t k = checked_k(base_case_max);
      try {
        if (k > cfg.max_k) throw max_k_exceeded(k, reps, cfg);
        table = count_table(p, j0, reps, k, table_options(cfg));
      } catch (BudgetExceeded& e) {
        if (candidate) attach_lower_bound(e, p, j0, *candidate, cfg.offset);
        throw;
      }
    }
    if (base_case_check(table, n0, base_case_max, reps)) break;
    // The conjecture was wrong: a base case is deficient. Every deficient
    // entry found is genuine, so the candidate only moves up.
    candidate = largest_deficient(table);
  }

  ProofCertificate cert;
  cert.polynomial = render_poly(p);
  cert.j0 = j0;
  cert.reps = reps;
  cert.offset = cfg.offset;
  cert.lambda = candidate;
  cert.n1 = w.n1;
  cert.d1 = render_poly(w.d1);
  cert.d2 = render_poly(w.d2);
  cert.root_bound = w.root_bound;
  cert.base_case_max = base_case_max;
  cert.k_explored = to_int64(base_case_max);
  cert.lambda_deficiency = candidate ? table[*candidate] : reps;

  const auto check = check_clauses(cert, cfg);
  if (!check) throw std::logic_error("freshly built certificate failed verification: " + check.failed_clause);
  cert.verified = true;
  return cert;
}

Verification verify_certificate(const ProofCertificate& cert, const ProveConfig& cfg) {
  if (!cert.verified) return fail("certificate is not marked verified");
  try {
    return check_clauses(cert, cfg);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const std::exception& e) {
    return fail(std::string("verification error: ") + e.what());
  }
}

std::string render_proof(const ProofCertificate& cert) {
  if (!cert.verified) throw UnverifiedCertificate("refusing to render an unverified certificate");
  const Polynomial p = parse_poly(cert.polynomial);
  const Polynomial d1 = parse_poly(cert.d1);
  const Polynomial d2 = parse_poly(cert.d2);
  const std::int64_t t = cert.offset;
  const std::int64_t n1 = cert.n1.value_or(0);
  const std::string reps = std::to_string(cert.reps);
  const std::string ways = cert.reps == 1 ? "1 way" : reps + " ways";
  const std::string pn_t = "p(N-" + std::to_string(t) + ")";

  std::ostringstream out;
  out << "Sequence: p(j) = " << cert.polynomial << ", j >= " << cert.j0 << "\n";
  out << "Representations required: C = " << reps << "\n\n";
  out << "Theorem.\n";
  if (cert.lambda) {
    out << "  lambda = " << *cert.lambda << ": it is the largest integer that is not a sum of distinct values p(j),\n"
        << "  j >= " << cert.j0 << ", in at least " << ways << ".\n\n";
  } else {
    out << "  lambda does not exist: every nonnegative integer has at least " << reps
        << (cert.reps == 1 ? " representation" : " representations") << " as a sum of\n"
        << "  distinct values p(j), j >= " << cert.j0 << ".\n\n";
  }

  const std::int64_t n0 = cert.lambda.value_or(-1);
  out << "Proof.\n";
  if (cert.lambda) {
    out << "  (0) " << *cert.lambda << " has exactly " << cert.lambda_deficiency << " representation"
        << (cert.lambda_deficiency == 1 ? "" : "s") << " (fewer than " << reps
        << "), read from the coefficient of q^" << *cert.lambda << " in prod_{j>=" << cert.j0 << "} (1 + q^p(j)).\n";
  }
  out << "  Let S(y) say that y has at least " << ways << ". We show S(y) for every y > " << n0
      << " by induction.\n\n";
  out << "  (1) Base cases. Every y in " << (n0 + 1) << " .. " << cert.base_case_max.get_str() << " (= p(" << n1
      << ")) has at least " << ways << ",\n"
      << "      checked coefficient by coefficient.\n\n";
  out << "  (2) Step. Let y > p(" << n1 << ") and let N be the unique integer with p(N) < y <= p(N+1);\n"
      << "      p is strictly increasing from j = " << cert.j0 << ", so N >= N1. Write\n"
      << "        y = (y - " << pn_t << ") + " << pn_t << ".\n"
      << "      For every integer N >= N1 = " << n1 << ":\n"
      << "        D1(N) = p(N) - " << pn_t << " - (" << n0 << ") = " << render_poly(d1, "N") << " >= 0\n"
      << "        D2(N) = 2*" << pn_t << " - p(N+1) = " << render_poly(d2, "N") << " > 0\n"
      << "      (N1 = " << n1 << "; no real root of D1 + 1 or D2 exceeds " << cert.root_bound.get_str()
      << ", and the integers\n"
      << "      from N1 up to that bound were checked one by one.)\n"
      << "      From D1: y - " << pn_t << " > p(N) - " << pn_t << " >= " << n0 << ".\n"
      << "      From D2: y - " << pn_t << " <= p(N+1) - " << pn_t << " < " << pn_t << ".\n"
      << "      So " << n0 << " < y - " << pn_t << " < y, and S(y - " << pn_t
      << ") holds by induction. Each of its\n"
      << "      representations uses only values below " << pn_t << ", so adding " << pn_t
      << " gives a distinct\n"
      << "      representation of y, and S(y) follows.\n\n";
  if (cert.lambda) {
    out << "  Hence lambda = " << *cert.lambda << ".\n";
  } else {
    out << "  Hence every nonnegative integer has at least " << ways << ".\n";
  }
  return out.str();
}

}  // namespace compseq
