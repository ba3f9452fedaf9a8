#include "slitmon/numerics.hpp"

#include <sstream>

namespace slitmon::numerics {

namespace {

std::string describe_failure(const QuadratureResult& partial, double a, double b,
                             double err) {
  std::ostringstream os;
  os.precision(17);
  os << "adaptive Simpson did not converge: worst subinterval [" << a << ", " << b
     << "] error estimate " << err << " (partial value " << partial.value << ")";
  return os.str();
}

}  // namespace

NonConvergence::NonConvergence(QuadratureResult partial, double worst_a, double worst_b,
                               double worst_error)
    : std::runtime_error(describe_failure(partial, worst_a, worst_b, worst_error)),
      partial_(partial),
      worst_a_(worst_a),
      worst_b_(worst_b),
      worst_error_(worst_error) {}

namespace detail {

void check_integration_bounds(double a, double b, double abs_tol, int max_depth) {
  if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b)) {
    throw std::invalid_argument("integrate: requires finite a < b");
  }
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: abs_tol must be positive");
  if (max_depth < tolerance::min_depth) {
    throw std::invalid_argument("integrate: max_depth below the minimum bisection depth");
  }
}

void throw_non_finite(double x) {
  std::ostringstream os;
  os.precision(17);
  os << "integrate: integrand is not finite at x = " << x;
  throw std::domain_error(os.str());
}

}  // namespace detail

double xlog2x(double x) {
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("xlog2x: argument must be >= 0");
  if (x == 0.0) return 0.0;
  return x * std::log2(x);
}

}  // namespace slitmon::numerics
