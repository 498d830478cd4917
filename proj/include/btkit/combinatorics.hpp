#pragma once

#include <cstdint>
#include <vector>

namespace btkit {

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
  return r;
}

// b_{m+1} = sum_k C(m, k) b_k.
inline std::uint64_t bell(int n) {
  std::vector<std::uint64_t> b{1};
  for (int m = 0; m < n; ++m) {
    std::uint64_t next = 0;
    for (int k = 0; k <= m; ++k) next += binomial(m, k) * b[static_cast<std::size_t>(k)];
    b.push_back(next);
  }
  return b[static_cast<std::size_t>(n)];
}

inline std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

}  // namespace btkit
