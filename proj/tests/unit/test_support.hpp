#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "compseq/poly.hpp"

namespace compseq::testing {

inline Polynomial random_poly(std::mt19937_64& rng, int max_degree, int max_abs = 99) {
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_abs);
  std::vector<Rational> c(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Polynomial(std::move(c));
}

// Exact counts by straightforward per-item loops with unbounded integers;
// independent of the blocked/bit-packed sweep under test.
inline std::vector<Integer> exact_counts(const std::vector<std::int64_t>& items, std::int64_t k) {
  std::vector<Integer> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (auto v : items) {
    std::vector<Integer> next = c;
    for (std::int64_t n = v; n <= k; ++n) next[n] += c[n - v];
    c = std::move(next);
  }
  return c;
}

}  // namespace compseq::testing
