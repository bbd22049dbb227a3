#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compseq/poly.hpp"

namespace compseq {

/// Verdict and evidence for whether p(j0), p(j0+1), ... is a complete
/// sequence suitable for the representation-count pipeline.
struct CompletenessReport {
  bool verdict = false;
  int degree = -1;
  /// gcd of p(j0), ..., p(j0 + degree); equals the gcd of all later values.
  Integer value_gcd = 1;
  /// Least m >= j0 with p(n) >= 1 for all n >= m. Absent if no such cutoff.
  std::optional<std::int64_t> positivity_from;
  /// Least m >= j0 with p(n+1) > p(n) for all n >= m. Absent if no such cutoff.
  std::optional<std::int64_t> strictly_increasing_from;
  std::vector<std::string> failures;
};

Integer value_gcd(const Polynomial& p, std::int64_t j0);

/// Checks: integer-valued, degree >= 1 with positive leading coefficient,
/// p(j) >= 1 and p strictly increasing on [j0, oo), and value gcd 1.
/// Every failed condition is recorded in `failures`.
CompletenessReport is_complete(const Polynomial& p, std::int64_t j0);

}  // namespace compseq
