#pragma once

#include <cstdint>
#include <limits>

namespace pr {

inline constexpr std::uint64_t kBinomSaturated = std::numeric_limits<std::uint64_t>::max();

// C(n,k), exact as long as the value fits into 64 bits, otherwise saturated
// at kBinomSaturated. The iterate r -> r*(n-k+i)/i keeps every intermediate
// value an exact binomial, so saturation is sticky and threshold comparisons
// against any uint64 stay correct.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r >= kBinomSaturated) return kBinomSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

inline bool binom_at_least(std::uint64_t n, std::uint64_t k, std::uint64_t threshold) {
  return binom(n, k) >= threshold;
}

/// Smallest x >= 1 with ceil(log2 x) semantics: number of bits needed so that
/// 2^result >= x.
inline std::uint64_t ceil_log2(std::uint64_t x) {
  std::uint64_t r = 0;
  while ((1ULL << r) < x) ++r;
  return r;
}

}  // namespace pr
