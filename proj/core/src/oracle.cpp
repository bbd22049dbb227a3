#include "compseq/oracle.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "compseq/errors.hpp"

namespace compseq {

namespace {

class SubsetCounter {
 public:
  SubsetCounter(const Polynomial& p, std::int64_t j0, std::int64_t max_value, const OracleLimit& limit)
      : limit_(limit), deadline_(std::chrono::steady_clock::now() + limit.time_budget) {
    if (max_value > limit.max_n) {
      throw LimitExceeded("n = " + std::to_string(max_value) + " exceeds oracle max_n " + std::to_string(limit.max_n));
    }
    Integer prev = 0;
    for (std::int64_t j = j0;; ++j) {
      const Integer v = eval_int(p, to_integer(j));
      if (v < 0 || (j > j0 && v <= prev)) {
        throw std::invalid_argument("oracle needs a nonnegative, strictly increasing sequence (j = " +
                                    std::to_string(j) + ")");
      }
      if (v > max_value) break;
      if (items_.size() == limit.max_items) {
        throw LimitExceeded("more than " + std::to_string(limit.max_items) + " items below " +
                            std::to_string(max_value));
      }
      items_.push_back(v.get_si());
      prev = v;
    }
    prefix_.assign(items_.size() + 1, 0);
    for (std::size_t i = 0; i < items_.size(); ++i) prefix_[i + 1] = prefix_[i] + items_[i];
  }

  // Subsets of the first i items summing to target. A zero item doubles
  // every count, so the empty-target case still recurses.
  Integer count(std::size_t i, std::int64_t target) {
    if (target < 0 || target > prefix_[i]) return 0;
    if (i == 0) return 1;
    const auto key = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(limit_.max_n + 1) +
                     static_cast<std::uint64_t>(target);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if ((++calls_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      throw LimitExceeded("oracle time budget exhausted");
    }
    Integer total = count(i - 1, target) + count(i - 1, target - items_[i - 1]);
    memo_.emplace(key, total);
    return total;
  }

  std::size_t item_count() const { return items_.size(); }

 private:
  OracleLimit limit_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::int64_t> items_;
  std::vector<std::int64_t> prefix_;
  std::unordered_map<std::uint64_t, Integer> memo_;
  std::uint64_t calls_ = 0;
};

}  // namespace

Integer rep_count_exact(const Polynomial& p, std::int64_t j0, std::int64_t n, const OracleLimit& limit) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  SubsetCounter counter(p, j0, n, limit);
  return counter.count(counter.item_count(), n);
}

std::vector<Integer> rep_counts_exact(const Polynomial& p, std::int64_t j0, std::int64_t n_max,
                                      const OracleLimit& limit) {
  if (n_max < 0) return {};
  SubsetCounter counter(p, j0, n_max, limit);
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) out.push_back(counter.count(counter.item_count(), n));
  return out;
}

std::optional<std::int64_t> lambda_bruteforce(const Polynomial& p, std::int64_t j0, const Integer& reps,
                                              std::int64_t limit_n, const OracleLimit& limit) {
  if (limit_n < 0) return std::nullopt;
  SubsetCounter counter(p, j0, limit_n, limit);
  for (std::int64_t n = limit_n; n >= 0; --n) {
    if (counter.count(counter.item_count(), n) < reps) return n;
  }
  return std::nullopt;
}

}  // namespace compseq
