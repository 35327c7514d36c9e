#include "pr/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace pr {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321214581766;

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(double a, double b, double fa, double fm, double fb, double whole, double tol,
                int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = entropy(lm), frm = entropy(rm);
  double left = simpson(a, m, fa, flm, fm);
  double right = simpson(m, b, fm, frm, fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive(a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive(m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

// antiderivative of -x ln x - (1-x) ln(1-x), in nats
double nat_antiderivative(double x) {
  double t1 = x <= 0.0 ? 0.0 : x * x * (2.0 * std::log(x) - 1.0) / 4.0;
  double u = 1.0 - x;
  double t2 = u <= 0.0 ? 0.0 : u * u * (2.0 * std::log(u) - 1.0) / 4.0;
  return -t1 + t2;
}

double bisect(double lo, double hi, double (*f)(double)) {
  double flo = f(lo);
  if (!(flo > 0.0) == !(f(hi) > 0.0))
    throw std::logic_error("bisect: endpoints do not bracket a root");
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double q_equation(double q) { return entropy(q) - 0.5; }
double c_equation(double c) { return 1.0 - c - entropy(c); }

}  // namespace

double entropy(double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("entropy: p must lie in [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

double entropy_integral(double a, double b) {
  if (!(0.0 <= a && a <= b && b <= 1.0))
    throw std::domain_error("entropy_integral: need 0 <= a <= b <= 1");
  if (a == b) return 0.0;
  double fa = entropy(a), fb = entropy(b), fm = entropy(0.5 * (a + b));
  double whole = simpson(a, b, fa, fm, fb);
  return adaptive(a, b, fa, fm, fb, whole, 1e-9, 48);
}

double entropy_integral_closed(double a, double b) {
  if (!(0.0 <= a && a <= b && b <= 1.0))
    throw std::domain_error("entropy_integral_closed: need 0 <= a <= b <= 1");
  return (nat_antiderivative(b) - nat_antiderivative(a)) / kLn2;
}

double solve_q() { return bisect(1e-9, 0.5 - 1e-9, q_equation); }

EntropyConstants solve_c_d() {
  EntropyConstants k{};
  k.q = solve_q();
  k.c = bisect(1e-9, 0.5 - 1e-9, c_equation);
  k.d = 1.0 / (1.0 - k.c);
  k.integral_q = entropy_integral(0.0, k.q);
  // the product form is the same function as H at c
  double product_form = -k.c * std::log2(k.c) + (k.c - 1.0) * std::log2(1.0 - k.c);
  if (std::abs(product_form - entropy(k.c)) > 1e-9)
    throw std::logic_error("solve_c_d: product form disagrees with entropy");
  return k;
}

EntropyConstants entropy_constants() { return solve_c_d(); }

WeakBudgetReport check_weak_budget(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("check_weak_budget: n >= 1");
  EntropyConstants k = entropy_constants();
  WeakBudgetReport r{};
  r.n = n;
  double n2 = static_cast<double>(n) * static_cast<double>(n);
  double per_unit = (1.0 - k.q) + 2.0 * k.integral_q;
  r.lhs = per_unit * n2;
  r.cap956 = 0.956 * n2;
  r.cap96 = 0.96 * n2;
  r.constants_ok = per_unit <= 0.956;
  r.middle_ok = 0.956 <= 0.96;
  r.holds_for_n = r.lhs <= r.cap956 && r.cap956 <= r.cap96;
  return r;
}

}  // namespace pr
