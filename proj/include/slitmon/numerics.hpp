#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace slitmon::numerics {

// Every accuracy knob used by the library and its acceptance suite.
namespace tolerance {
inline constexpr double quadrature_abs = 1e-10;  // per-call absolute tolerance
inline constexpr int max_depth = 40;             // bisection cap for adaptive Simpson
inline constexpr int min_depth = 4;              // forced bisections before accepting
inline constexpr double density_matrix = 1e-12;  // trace / hermiticity slack
inline constexpr double joint_table = 1e-12;     // total and marginal slack
inline constexpr double pattern_normalization = 1e-6;
inline constexpr double joint_normalization = 1e-5;
inline constexpr double oracle_relative_l2 = 1e-8;
inline constexpr double closed_form_identity = 1e-10;
inline constexpr double erf_abs = 1e-12;
inline constexpr double chain_slack_closed = 1e-9;
inline constexpr double chain_slack_quadrature = 1e-6;
}  // namespace tolerance

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t subdivisions = 0;
};

/// Thrown when adaptive Simpson hits the depth cap. Carries the partial
/// estimate and the worst offending subinterval.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(QuadratureResult partial, double worst_a, double worst_b,
                 double worst_error);

  const QuadratureResult& partial() const noexcept { return partial_; }
  double worst_a() const noexcept { return worst_a_; }
  double worst_b() const noexcept { return worst_b_; }
  double worst_error() const noexcept { return worst_error_; }

 private:
  QuadratureResult partial_;
  double worst_a_;
  double worst_b_;
  double worst_error_;
};

namespace detail {

void check_integration_bounds(double a, double b, double abs_tol, int max_depth);
[[noreturn]] void throw_non_finite(double x);

template <class F>
class AdaptiveSimpson {
 public:
  AdaptiveSimpson(F& f, int max_depth) : f_(f), max_depth_(max_depth) {}

  QuadratureResult run(double a, double b, double abs_tol) {
    const double fa = eval(a);
    const double fb = eval(b);
    const double m = 0.5 * (a + b);
    const double fm = eval(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    refine(a, fa, m, fm, b, fb, whole, abs_tol, 0);
    if (failed_) throw NonConvergence(result_, worst_a_, worst_b_, worst_error_);
    return result_;
  }

 private:
  double eval(double x) {
    const double y = f_(x);
    if (!std::isfinite(y)) throw_non_finite(x);
    return y;
  }

  void refine(double a, double fa, double m, double fm, double b, double fb,
              double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;

    const bool converged = std::abs(delta) <= 15.0 * tol;
    if ((depth >= tolerance::min_depth && converged) || depth >= max_depth_) {
      const double err = std::abs(delta) / 15.0;
      result_.value += left + right + delta / 15.0;
      result_.error_estimate += err;
      ++result_.subdivisions;
      if (!converged) {
        failed_ = true;
        if (err > worst_error_) {
          worst_error_ = err;
          worst_a_ = a;
          worst_b_ = b;
        }
      }
      return;
    }
    refine(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1);
    refine(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
  }

  F& f_;
  int max_depth_;
  QuadratureResult result_{};
  bool failed_ = false;
  double worst_a_ = 0.0;
  double worst_b_ = 0.0;
  double worst_error_ = 0.0;
};

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] by interval bisection.
///
/// Each subinterval is accepted once the two-panel and one-panel Simpson
/// estimates differ by at most 15 times its share of abs_tol; the accepted
/// value includes the Richardson correction. Throws NonConvergence when a
/// subinterval still fails at max_depth, std::domain_error when f returns a
/// non-finite value, and std::invalid_argument for a >= b or abs_tol <= 0.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol,
                           int max_depth = tolerance::max_depth) {
  detail::check_integration_bounds(a, b, abs_tol, max_depth);
  detail::AdaptiveSimpson<std::remove_reference_t<F>> simpson(f, max_depth);
  return simpson.run(a, b, abs_tol);
}

/// x * log2(x) with 0 log 0 = 0. Negative input is a domain error.
double xlog2x(double x);

}  // namespace slitmon::numerics
