#pragma once

#include <cstdint>

namespace pr {

/// Binary entropy H(p) = -(p log2 p + (1-p) log2(1-p)). Continuous extension
/// H(0) = H(1) = 0 at the endpoints; arguments outside [0,1] are a domain
/// error.
double entropy(double p);

/// Integral of H over [a,b] by adaptive Simpson quadrature, absolute error
/// <= 1e-8. 0 <= a <= b <= 1.
double entropy_integral(double a, double b);

/// The same integral via the closed antiderivative; kept as an independent
/// cross-check route for the quadrature.
double entropy_integral_closed(double a, double b);

/// The minimizer of (1-q) + 2*Int_0^q H on (0, 1/2): root of H(q) = 1/2 by
/// bisection to an interval of 1e-12.
double solve_q();

struct EntropyConstants {
  double q;           // H(q) = 1/2
  double c;           // 1 - c = H(c)
  double d;           // 1/(1-c)
  double integral_q;  // Int_0^q H
};

/// c solves 1 - c = H(c) on (0, 1/2) by bisection to 1e-12; d = 1/(1-c). The
/// product form log2(c^-c (1-c)^(c-1)) must agree with H(c) to 1e-9.
EntropyConstants solve_c_d();

EntropyConstants entropy_constants();

struct WeakBudgetReport {
  std::uint64_t n;
  double lhs;              // (1-q) n^2 + 2 n^2 Int_0^q H
  double cap956;           // 0.956 n^2
  double cap96;            // 0.96 n^2
  bool constants_ok;       // (1-q) + 2 Int_0^q H <= 0.956 (n-free)
  bool middle_ok;          // 0.956 <= 0.96
  bool holds_for_n;        // lhs <= cap956 <= cap96
};

WeakBudgetReport check_weak_budget(std::uint64_t n);

}  // namespace pr
