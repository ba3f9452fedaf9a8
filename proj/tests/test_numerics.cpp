#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "slitmon/numerics.hpp"

using namespace slitmon::numerics;

TEST_SUITE("numerics") {

TEST_CASE("polynomial integrates exactly") {
  const auto r = integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-12);
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.subdivisions > 0);
}

TEST_CASE("unit Gaussian normalizes") {
  const auto r = integrate(
      [](double u) { return std::exp(-u * u) / std::sqrt(std::numbers::pi); }, -8.0, 8.0, 1e-12);
  CHECK(std::abs(r.value - 1.0) < 1e-10);
}

TEST_CASE("momentum-measurement entropy integrand matches brute-force trapezoid") {
  const double u0 = 0.8326;
  auto f = [u0](double u) {
    const double density = (std::exp(-(u - u0) * (u - u0)) + std::exp(-(u + u0) * (u + u0))) /
                           (2.0 * std::sqrt(std::numbers::pi));
    const double p = 1.0 / (1.0 + std::exp(-4.0 * u * u0));
    return density * slitmon::testing::binary_entropy_ref(p);
  };
  const double adaptive = integrate(f, -u0 - 8.0, u0 + 8.0, 1e-12).value;
  const double brute = slitmon::testing::trapezoid_rule(f, -u0 - 8.0, u0 + 8.0, 1'000'000);
  CHECK(std::abs(adaptive - brute) < 1e-8);
}

TEST_CASE("linearity and interval additivity") {
  auto f = [](double x) { return std::sin(3.0 * x) + x; };
  auto g = [](double x) { return std::exp(-x * x); };
  const double tol = 1e-11;
  const double a = 2.5;
  const double b = -1.25;
  const double combined =
      integrate([&](double x) { return a * f(x) + b * g(x); }, -1.0, 2.0, tol).value;
  const double separate =
      a * integrate(f, -1.0, 2.0, tol).value + b * integrate(g, -1.0, 2.0, tol).value;
  CHECK(std::abs(combined - separate) < (std::abs(a) + std::abs(b) + 1.0) * tol);

  const double whole = integrate(g, -3.0, 4.0, tol).value;
  const double split = integrate(g, -3.0, 0.7, tol).value + integrate(g, 0.7, 4.0, tol).value;
  CHECK(std::abs(whole - split) < 3.0 * tol);
}

TEST_CASE("deterministic for identical inputs") {
  auto f = [](double x) { return std::cos(x) * std::exp(-0.1 * x * x); };
  const auto r1 = integrate(f, -5.0, 5.0, 1e-10);
  const auto r2 = integrate(f, -5.0, 5.0, 1e-10);
  CHECK(r1.value == r2.value);
  CHECK(r1.subdivisions == r2.subdivisions);
}

TEST_CASE("depth cap reports the offending subinterval") {
  auto step = [](double x) { return x < 0.3 ? 0.0 : 1.0; };
  try {
    (void)integrate(step, 0.0, 1.0, 1e-30, 20);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(e.worst_a() <= 0.3);
    CHECK(e.worst_b() >= 0.3);
    CHECK(e.worst_error() > 0.0);
    CHECK(std::abs(e.partial().value - 0.7) < 1e-4);
  }
}

TEST_CASE("argument and integrand errors") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate(f, 1.0, 0.0, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, 1e-10),
                  std::domain_error);
}

TEST_CASE("xlog2x") {
  CHECK(xlog2x(0.0) == 0.0);
  CHECK(xlog2x(1.0) == 0.0);
  CHECK(xlog2x(0.5) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK_THROWS_AS(xlog2x(-1e-300), std::domain_error);
  // continuous at 0
  double previous = 1.0;
  for (double x = 1e-2; x > 1e-300; x *= 1e-3) {
    const double v = std::abs(xlog2x(x));
    CHECK(v < previous);
    previous = v;
  }
  CHECK(previous < 1e-290);
}

}  // TEST_SUITE
