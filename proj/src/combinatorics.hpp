#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ord::detail {

inline std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

// Colex rank of a strictly increasing index combination.
inline std::size_t subset_rank(std::span<const std::size_t> idx) {
  std::size_t rank = 0;
  for (std::size_t j = 0; j < idx.size(); ++j) {
    rank += binom(idx[j], j + 1);
  }
  return rank;
}

// Calls fn for every strictly increasing k-combination of [0, n), in
// lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(std::span<const std::size_t>());
    return;
  }
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(std::span<const std::size_t>(idx));
    std::size_t j = k;
    bool advanced = false;
    while (j > 0) {
      --j;
      if (idx[j] + (k - j) < n) {
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
    ++idx[j];
    for (std::size_t t = j + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace ord::detail
