#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pr {

/// Sperner number: least N with C(N, floor(N/2)) >= n, i.e. the least
/// dimension whose Boolean lattice holds an antichain of size n.
std::uint64_t sperner_alpha(std::uint64_t n);

/// beta(N,n) = min{ b : C(N,b) >= n }. Requires N >= sperner_alpha(n); for
/// n = 1 this is 0, which sits outside the usual regime 1 <= beta.
std::uint64_t beta(std::uint64_t big_n, std::uint64_t n);

/// N*(n) = max{ N >= alpha(n) : N - beta(N,n) < alpha(n) }, n >= 2.
std::uint64_t n_star(std::uint64_t n);

/// Smallest N with N - beta(N,n) >= alpha(2n-1), n >= 2.
std::uint64_t n_plus(std::uint64_t n);

/// N = nm + n + m, the host dimension of the basic blob argument.
std::uint64_t blob_host_dimension(std::uint64_t m, std::uint64_t n);

/// Validity test for the refined Q_m-vs-Q_n bound:
/// (n+m)/n * 1/((1-eps) log2 m) + m^(-eps) <= eps, with n >= m >= 2.
bool epsilon_condition(std::uint64_t m, std::uint64_t n, double eps);

/// A computed closed-form bound together with the formula label.
struct BoundReport {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  double epsilon = 0.0;
  double value = 0.0;
  std::string theorem_tag;
  bool degenerate = false;
  std::optional<double> headline;  // form with eps = 1/sqrt(log2 m), when it applies
};

/// n(m - (1-eps)^2 log2 m); requires epsilon_condition(m,n,eps). Throws
/// HypothesisViolation otherwise.
BoundReport qmqn_bound(std::uint64_t m, std::uint64_t n, double eps);

struct DiamondBounds {
  std::uint64_t lower = 0;  // 2 alpha(n)
  std::uint64_t upper = 0;  // alpha(n) + alpha(2n-1)
  bool degenerate = false;  // n = 1
};
DiamondBounds diamond_bounds(std::uint64_t n);

struct ForkBounds {
  std::uint64_t lower = 0;                 // N*(n) + 1
  std::uint64_t upper = 0;                 // N*(n) + 3
  std::optional<std::uint64_t> sharpened;  // N*(n) + 2 when alpha(2n-1) <= alpha(n)+1
};
ForkBounds fork_bounds(std::uint64_t n);

}  // namespace pr
