#pragma once

// Slow reference implementations used only by the tests. None of them share
// code paths with the library routines they check.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>

namespace slitmon::testing {

/// erf(x) = 2/sqrt(pi) exp(-x^2) sum_n 2^n x^(2n+1) / (2n+1)!!, all terms
/// positive so long double keeps ~18 digits even at |x| = 6.
inline long double erf_series(long double x) {
  if (x < 0) return -erf_series(-x);
  const long double x2 = x * x;
  long double term = x;
  long double sum = term;
  for (int n = 1; n < 2000; ++n) {
    term *= 2.0L * x2 / (2.0L * n + 1.0L);
    sum += term;
    if (term < sum * 1e-21L) break;
  }
  return 2.0L / std::sqrt(std::numbers::pi_v<long double>) * std::exp(-x2) * sum;
}

/// Composite trapezoid with n intervals.
inline double trapezoid_rule(const std::function<double(double)>& f, double a, double b,
                             std::size_t n) {
  const double h = (b - a) / static_cast<double>(n);
  long double sum = 0.5L * (f(a) + f(b));
  for (std::size_t i = 1; i < n; ++i) sum += f(a + h * static_cast<double>(i));
  return static_cast<double>(sum * h);
}

/// H2 evaluated directly from its definition in long double.
inline double binary_entropy_ref(double p) {
  auto term = [](long double q) { return q <= 0 ? 0.0L : -q * std::log2(q); };
  return static_cast<double>(term(p) + term(1.0L - p));
}

}  // namespace slitmon::testing
