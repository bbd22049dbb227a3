#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "compseq/complete.hpp"
#include "compseq/counts.hpp"
#include "compseq/poly.hpp"

namespace compseq {

struct ProveConfig {
  /// Shift t in the decomposition y = (y - p(N-t)) + p(N-t).
  std::int64_t offset = 3;
  /// First exploration table size; defaults to max(1024, 4 p(j0 + 8)).
  std::optional<std::int64_t> initial_k;
  std::int64_t max_k = std::int64_t{1} << 31;
  std::uint64_t memory_budget = std::uint64_t{2} << 30;
};

class NotComplete : public std::runtime_error {
 public:
  explicit NotComplete(CompletenessReport report);
  const CompletenessReport& report() const { return report_; }

 private:
  CompletenessReport report_;
};

struct Exploration {
  /// Largest deficient n of the final table; absent if there is none.
  std::optional<std::int64_t> candidate;
  CountTable table;
};

/// Doubles the table size from the initial K until the largest deficient
/// entry sits in the lower half of the table, or no deficient entry exists.
/// The candidate is only a conjecture; prove_lambda certifies it.
// First exploration size when ProveConfig::initial_k is unset.
std::int64_t default_initial_k(const Polynomial& p, std::int64_t j0, std::int64_t max_k = std::int64_t{1} << 31);

Exploration explore(const Polynomial& p, std::int64_t j0, std::uint64_t reps, const ProveConfig& cfg = {});

/// The two induction inequalities as polynomials in N, and the integer
/// cutoff past which both hold:
///   d1(N) = p(N) - p(N-t) - n0  >= 0
///   d2(N) = 2 p(N-t) - p(N+1)   >  0
struct CutoffWitness {
  std::int64_t offset_t = 3;
  Polynomial d1;
  Polynomial d2;
  std::int64_t n1 = 0;
  /// Neither d1 + 1 nor d2 has a real root above this value.
  Integer root_bound;
};

/// `n0` is the conjectured lambda, or -1 when no integer is deficient.
/// Throws NotEventuallyPositive when either inequality never holds for all
/// large N (e.g. a linear p whose d1 is a negative constant).
CutoffWitness cutoff(const Polynomial& p, std::int64_t j0, std::int64_t n0, std::int64_t t);

/// True iff every n with n0 < n <= base_case_max has at least `reps`
/// representations in the table. Throws TableTooShort if the table stops
/// before base_case_max.
bool base_case_check(const CountTable& table, std::int64_t n0, const Integer& base_case_max, std::uint64_t reps);

/// The record that lambda_{j0,C}(p) = lambda, with everything needed to
/// re-check it independently. Polynomials are stored in canonical text.
struct ProofCertificate {
  std::string polynomial;
  std::int64_t j0 = 1;
  std::uint64_t reps = 1;
  std::int64_t offset = 3;
  /// Absent: every n >= 0 has at least `reps` representations.
  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> n1;
  std::string d1;
  std::string d2;
  Integer root_bound;
  /// p(n1): the last base case.
  Integer base_case_max;
  /// Size of the table the base-case clauses are checked against; always
  /// equal to base_case_max so the certificate has no free fields.
  std::int64_t k_explored = 0;
  /// Capped count at lambda (< reps); equals reps when lambda is absent.
  std::uint64_t lambda_deficiency = 0;
  bool verified = false;

  friend bool operator==(const ProofCertificate&, const ProofCertificate&) = default;
};

/// Runs the full pipeline: completeness check, exploration, cutoff, base
/// cases (retrying with a larger candidate if a base case fails), and
/// independent verification. Throws NotComplete or BudgetExceeded.
ProofCertificate prove_lambda(const Polynomial& p, std::int64_t j0, std::uint64_t reps, const ProveConfig& cfg = {});

struct Verification {
  bool ok = false;
  std::string failed_clause;
  explicit operator bool() const { return ok; }
};

/// Re-derives every field of the certificate from the polynomial, j0, reps,
/// offset and lambda, recomputing the base cases with the saturating-counter
/// sweep regardless of the cap. Only BudgetExceeded escapes; every other
/// problem is reported as a failed clause.
Verification verify_certificate(const ProofCertificate& cert, const ProveConfig& cfg = {});

/// Human-readable theorem and proof. Throws UnverifiedCertificate unless
/// cert.verified is set.
std::string render_proof(const ProofCertificate& cert);

}  // namespace compseq
