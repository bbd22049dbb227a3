#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "compseq/poly.hpp"

namespace compseq {

struct CountOptions {
  std::uint64_t memory_budget = std::uint64_t{2} << 30;
  /// Use saturating counters even when the cap is 1.
  bool force_counters = false;
};

/// Representation counts min(cap, r(n)) for n in [0, k], where r(n) is the
/// number of ways to write n as a sum of distinct items. These are the
/// coefficients of prod (1 + q^item) truncated at q^k and capped at `cap`.
class CountTable {
 public:
  std::int64_t k() const { return k_; }
  std::uint64_t cap() const { return cap_; }
  /// Largest j with p(j) <= k; j0 - 1 when no value fits. -1 for tables
  /// built from a bare item list.
  std::int64_t j_max() const { return j_max_; }
  std::size_t item_count() const { return item_count_; }
  bool bit_packed() const { return std::holds_alternative<Bits>(store_); }
  std::uint64_t bytes() const;

  /// Capped count at n; n must lie in [0, k].
  std::uint64_t operator[](std::int64_t n) const;
  /// Bounds-checked variant of operator[].
  std::uint64_t at(std::int64_t n) const;

  /// Largest n in [lo, hi] (clamped to [0, k]) whose count is below the cap.
  std::optional<std::int64_t> largest_deficient_in(std::int64_t lo, std::int64_t hi) const;

  friend bool operator==(const CountTable& a, const CountTable& b) {
    return a.k_ == b.k_ && a.cap_ == b.cap_ && a.counts_equal(b);
  }

 private:
  struct Bits {
    std::vector<std::uint64_t> words;
    friend bool operator==(const Bits&, const Bits&) = default;
  };
  using Store = std::variant<Bits, std::vector<std::uint8_t>, std::vector<std::uint16_t>,
                             std::vector<std::uint32_t>, std::vector<std::uint64_t>>;

  bool counts_equal(const CountTable& other) const;

  friend CountTable count_items(std::span<const std::int64_t> items, std::uint64_t cap, std::int64_t k,
                                const CountOptions& options);
  friend CountTable count_table(const Polynomial& p, std::int64_t j0, std::uint64_t cap, std::int64_t k,
                                const CountOptions& options);

  std::int64_t k_ = 0;
  std::uint64_t cap_ = 1;
  std::int64_t j_max_ = -1;
  std::size_t item_count_ = 0;
  Store store_;
};

/// Bytes a table of size k with the given cap occupies.
std::uint64_t table_bytes(std::uint64_t cap, std::int64_t k, bool force_counters = false);

/// Dense 0/1 subset-sum sweep over the given nonnegative items. A zero item
/// contributes the factor (1 + q^0) = 2.
/// Throws BudgetExceeded if the table would not fit in the memory budget.
CountTable count_items(std::span<const std::int64_t> items, std::uint64_t cap, std::int64_t k,
                       const CountOptions& options = {});

/// Counts over the items p(j0), p(j0+1), ... that do not exceed k. The
/// sequence must be nonnegative and strictly increasing from j0.
CountTable count_table(const Polynomial& p, std::int64_t j0, std::uint64_t cap, std::int64_t k,
                       const CountOptions& options = {});

/// Largest n in [0, k] with count below the cap, if any.
std::optional<std::int64_t> largest_deficient(const CountTable& t);

}  // namespace compseq
