#include "pr/extremal.hpp"

#include <cmath>
#include <stdexcept>

#include "pr/binom.hpp"
#include "pr/errors.hpp"

namespace pr {

std::uint64_t sperner_alpha(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sperner_alpha: n >= 1 required");
  std::uint64_t big_n = 0;
  while (!binom_at_least(big_n, big_n / 2, n)) ++big_n;
  return big_n;
}

std::uint64_t beta(std::uint64_t big_n, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("beta: n >= 1 required");
  if (big_n < sperner_alpha(n))
    throw std::invalid_argument("beta: N >= sperner_alpha(n) required");
  std::uint64_t b = 0;
  while (!binom_at_least(big_n, b, n)) ++b;
  return b;
}

std::uint64_t n_star(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("n_star: n >= 2 required");
  std::uint64_t a = sperner_alpha(n);
  std::uint64_t best = a;
  for (std::uint64_t big_n = a; big_n <= 2 * a; ++big_n)
    if (big_n - beta(big_n, n) < a) best = big_n;
  return best;
}

std::uint64_t n_plus(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("n_plus: n >= 2 required");
  std::uint64_t target = sperner_alpha(2 * n - 1);
  for (std::uint64_t big_n = sperner_alpha(n);; ++big_n)
    if (big_n - beta(big_n, n) >= target) return big_n;
}

std::uint64_t blob_host_dimension(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("blob_host_dimension: m,n >= 1");
  return n * m + n + m;
}

bool epsilon_condition(std::uint64_t m, std::uint64_t n, double eps) {
  if (!(n >= m && m >= 2)) throw std::invalid_argument("epsilon_condition: n >= m >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("epsilon_condition: 0 < eps < 1");
  double log_m = std::log2(static_cast<double>(m));
  double lhs = (static_cast<double>(n + m) / static_cast<double>(n)) / ((1.0 - eps) * log_m) +
               std::pow(static_cast<double>(m), -eps);
  return lhs <= eps;
}

BoundReport qmqn_bound(std::uint64_t m, std::uint64_t n, double eps) {
  if (!epsilon_condition(m, n, eps))
    throw HypothesisViolation("qmqn_bound: (n+m)/n * 1/((1-eps) log m) + m^-eps <= eps fails");
  double log_m = std::log2(static_cast<double>(m));
  BoundReport r;
  r.m = m;
  r.n = n;
  r.epsilon = eps;
  r.value = static_cast<double>(n) * (static_cast<double>(m) - (1.0 - eps) * (1.0 - eps) * log_m);
  r.theorem_tag = "qmqn-upper";
  double eps_star = 1.0 / std::sqrt(log_m);
  if (std::abs(eps - eps_star) < 1e-12)
    r.headline = static_cast<double>(n) *
                 (static_cast<double>(m) - (1.0 - 2.0 / std::sqrt(log_m)) * log_m);
  return r;
}

DiamondBounds diamond_bounds(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("diamond_bounds: n >= 1");
  DiamondBounds b;
  std::uint64_t a = sperner_alpha(n);
  b.lower = 2 * a;
  b.upper = a + sperner_alpha(2 * n - 1);
  b.degenerate = (n == 1);
  if (!b.degenerate && b.upper > 2 * a + 2)
    throw ConstructionBug("diamond_bounds: upper exceeded 2*alpha(n)+2");
  return b;
}

ForkBounds fork_bounds(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("fork_bounds: n >= 2");
  ForkBounds b;
  std::uint64_t ns = n_star(n);
  b.lower = ns + 1;
  b.upper = ns + 3;
  if (sperner_alpha(2 * n - 1) <= sperner_alpha(n) + 1) b.sharpened = ns + 2;
  return b;
}

}  // namespace pr
