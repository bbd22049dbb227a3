#include "compseq/counts.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "compseq/errors.hpp"

namespace compseq {

namespace {

constexpr std::int64_t kBlock = std::int64_t{1} << 14;

std::uint64_t counter_width(std::uint64_t cap) {
  if (cap <= std::numeric_limits<std::uint8_t>::max()) return 1;
  if (cap <= std::numeric_limits<std::uint16_t>::max()) return 2;
  if (cap <= std::numeric_limits<std::uint32_t>::max()) return 4;
  return 8;
}

// dst[i] = min(cap, dst[i] + src[i]); the ranges must not overlap.
template <class T>
void saturating_add(T* __restrict dst, const T* __restrict src, std::int64_t len, T cap) {
  for (std::int64_t i = 0; i < len; ++i) {
    const T s = src[i];
    dst[i] = static_cast<T>(std::min<T>(dst[i], static_cast<T>(cap - s)) + s);
  }
}

// One 0/1 item: counts[n] += counts[n - v] for n descending. Blocks are at
// most v long, so each block reads only entries this sweep has not written.
template <class T>
void sweep_counters(std::vector<T>& counts, std::int64_t v, T cap) {
  const auto k = static_cast<std::int64_t>(counts.size()) - 1;
  if (v > k) return;
  T* data = counts.data();
  if (v == 0) {
    for (std::int64_t n = 0; n <= k; ++n) data[n] = static_cast<T>(std::min<T>(data[n], static_cast<T>(cap - data[n])) + data[n]);
    return;
  }
  const std::int64_t block = std::min(v, kBlock);
  for (std::int64_t hi = k + 1; hi > v;) {
    const std::int64_t lo = std::max(v, hi - block);
    saturating_add(data + lo, data + lo - v, hi - lo, cap);
    hi = lo;
  }
}

// Bit-vector form of the same sweep: bits |= bits << v, high words first so
// every source word is read before it is overwritten.
void sweep_bits(std::vector<std::uint64_t>& words, std::int64_t v) {
  const auto n = static_cast<std::int64_t>(words.size());
  const std::int64_t q = v / 64;
  const unsigned r = static_cast<unsigned>(v % 64);
  if (q >= n) return;
  std::uint64_t* w = words.data();
  if (r == 0) {
    for (std::int64_t i = n - 1; i >= q; --i) w[i] |= w[i - q];
    return;
  }
  for (std::int64_t i = n - 1; i > q; --i) {
    w[i] |= (w[i - q] << r) | (w[i - q - 1] >> (64 - r));
  }
  w[q] |= w[0] << r;
}

std::uint64_t tail_mask(std::int64_t k) {
  const unsigned used = static_cast<unsigned>((k + 1) % 64);
  return used == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
}

template <class T>
std::vector<T> run_counters(std::span<const std::int64_t> items, std::uint64_t cap, std::int64_t k) {
  std::vector<T> counts(static_cast<std::size_t>(k) + 1, T{0});
  counts[0] = 1;
  for (const auto v : items) sweep_counters(counts, v, static_cast<T>(cap));
  return counts;
}

}  // namespace

std::uint64_t table_bytes(std::uint64_t cap, std::int64_t k, bool force_counters) {
  const auto entries = static_cast<std::uint64_t>(k) + 1;
  if (cap == 1 && !force_counters) return (entries + 63) / 64 * 8;
  const std::uint64_t width = counter_width(cap);
  if (entries > std::numeric_limits<std::uint64_t>::max() / width) return std::numeric_limits<std::uint64_t>::max();
  return entries * width;
}

CountTable count_items(std::span<const std::int64_t> items, std::uint64_t cap, std::int64_t k,
                       const CountOptions& options) {
  if (cap < 1) throw std::invalid_argument("count cap must be >= 1");
  if (k < 0) throw std::invalid_argument("table size must be >= 0");
  for (const auto v : items) {
    if (v < 0) throw std::invalid_argument("items must be nonnegative, got " + std::to_string(v));
  }
  const std::uint64_t need = table_bytes(cap, k, options.force_counters);
  if (need > options.memory_budget) {
    throw BudgetExceeded("count table of " + std::to_string(k + 1) + " entries needs " + std::to_string(need) +
                             " bytes, budget is " + std::to_string(options.memory_budget) + " bytes",
                         k, need, options.memory_budget);
  }

  CountTable t;
  t.k_ = k;
  t.cap_ = cap;
  t.item_count_ = static_cast<std::size_t>(
      std::count_if(items.begin(), items.end(), [k](std::int64_t v) { return v <= k; }));

  if (cap == 1 && !options.force_counters) {
    std::vector<std::uint64_t> words(static_cast<std::size_t>(k / 64 + 1), 0);
    words[0] = 1;
    for (const auto v : items) sweep_bits(words, v);
    words.back() &= tail_mask(k);
    t.store_ = CountTable::Bits{std::move(words)};
    return t;
  }
  switch (counter_width(cap)) {
    case 1: t.store_ = run_counters<std::uint8_t>(items, cap, k); break;
    case 2: t.store_ = run_counters<std::uint16_t>(items, cap, k); break;
    case 4: t.store_ = run_counters<std::uint32_t>(items, cap, k); break;
    default: t.store_ = run_counters<std::uint64_t>(items, cap, k); break;
  }
  return t;
}

CountTable count_table(const Polynomial& p, std::int64_t j0, std::uint64_t cap, std::int64_t k,
                       const CountOptions& options) {
  std::vector<std::int64_t> items;
  std::int64_t j = j0;
  Integer prev;
  for (;; ++j) {
    const Integer v = eval_int(p, to_integer(j));
    if (j > j0 && v <= prev) {
      throw std::invalid_argument("sequence is not strictly increasing at j = " + std::to_string(j));
    }
    if (v > k) break;
    items.push_back(to_int64(v));
    prev = v;
  }
  CountTable t = count_items(items, cap, k, options);
  t.j_max_ = j - 1;
  return t;
}

std::uint64_t CountTable::bytes() const {
  return std::visit(
      [](const auto& s) -> std::uint64_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Bits>) {
          return s.words.size() * sizeof(std::uint64_t);
        } else {
          return s.size() * sizeof(typename std::decay_t<decltype(s)>::value_type);
        }
      },
      store_);
}

std::uint64_t CountTable::operator[](std::int64_t n) const {
  return std::visit(
      [n](const auto& s) -> std::uint64_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Bits>) {
          return (s.words[static_cast<std::size_t>(n / 64)] >> (n % 64)) & 1U;
        } else {
          return s[static_cast<std::size_t>(n)];
        }
      },
      store_);
}

std::uint64_t CountTable::at(std::int64_t n) const {
  if (n < 0 || n > k_) throw TableTooShort("index " + std::to_string(n) + " outside [0, " + std::to_string(k_) + "]");
  return (*this)[n];
}

std::optional<std::int64_t> CountTable::largest_deficient_in(std::int64_t lo, std::int64_t hi) const {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min(hi, k_);
  if (lo > hi) return std::nullopt;
  return std::visit(
      [&](const auto& s) -> std::optional<std::int64_t> {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Bits>) {
          const std::int64_t lo_word = lo / 64;
          for (std::int64_t w = hi / 64; w >= lo_word; --w) {
            std::uint64_t missing = ~s.words[static_cast<std::size_t>(w)];
            if (w == hi / 64) missing &= tail_mask(hi);
            if (w == lo_word) missing &= ~std::uint64_t{0} << (lo % 64);
            if (missing != 0) return w * 64 + 63 - std::countl_zero(missing);
          }
          return std::nullopt;
        } else {
          for (std::int64_t n = hi; n >= lo; --n) {
            if (s[static_cast<std::size_t>(n)] < cap_) return n;
          }
          return std::nullopt;
        }
      },
      store_);
}

bool CountTable::counts_equal(const CountTable& other) const {
  if (store_.index() == other.store_.index()) return store_ == other.store_;
  for (std::int64_t n = 0; n <= k_; ++n) {
    if ((*this)[n] != other[n]) return false;
  }
  return true;
}

std::optional<std::int64_t> largest_deficient(const CountTable& t) { return t.largest_deficient_in(0, t.k()); }

}  // namespace compseq
