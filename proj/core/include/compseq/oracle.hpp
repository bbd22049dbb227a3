#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "compseq/poly.hpp"

namespace compseq {

struct OracleLimit {
  std::int64_t max_n = 1'000'000;
  std::size_t max_items = 64;
  std::chrono::milliseconds time_budget{60'000};
};

/// Exact number of sets of distinct values p(j), j >= j0, summing to n.
///
/// Top-down memoized enumeration with exact big-integer counts; shares no
/// code with the table sweep. Throws LimitExceeded past any limit.
Integer rep_count_exact(const Polynomial& p, std::int64_t j0, std::int64_t n, const OracleLimit& limit = {});

/// Largest n <= limit_n with fewer than `reps` exact representations.
// Counts for every n in [0, n_max], sharing one memo table.
std::vector<Integer> rep_counts_exact(const Polynomial& p, std::int64_t j0, std::int64_t n_max,
                                      const OracleLimit& limit = {});

std::optional<std::int64_t> lambda_bruteforce(const Polynomial& p, std::int64_t j0, const Integer& reps,
                                              std::int64_t limit_n, const OracleLimit& limit = {});

}  // namespace compseq
