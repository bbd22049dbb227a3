#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace compseq {

// p(n) was not an integer where an integer was required.
class NonIntegerValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Leading coefficient is not positive, so no positivity cutoff exists.
class NotEventuallyPositive : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A count table or exploration step would exceed the configured limits.
// `required_k` is the table size that was requested; `certificate_lower_bound`,
// when known, is a proven lower bound on the table size any certificate for
// the instance needs.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::int64_t required_k,
                 std::uint64_t required_bytes, std::uint64_t budget_bytes)
      : std::runtime_error(what),
        required_k(required_k),
        required_bytes(required_bytes),
        budget_bytes(budget_bytes) {}

  std::int64_t required_k;
  std::uint64_t required_bytes;
  std::uint64_t budget_bytes;
  std::optional<mpz_class> certificate_lower_bound;
};

class TableTooShort : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UnverifiedCertificate : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace compseq
