#include <doctest.h>

#include <cmath>
#include <vector>

#include "slitmon/interference.hpp"

using namespace slitmon;

namespace {

const PhysicalConstants kSI;
constexpr double kFigureTime = 16.5e-9;

std::vector<double> wide_grid(const ExperimentConfig& config, double t, std::size_t n,
                              const ModelOptions& options = {}) {
  const double w = pattern_half_width(config, kSI, t, options);
  return linspace(-w, w, n);
}

std::vector<double> local_maxima(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] > y[i - 1] && y[i] >= y[i + 1]) peaks.push_back(x[i]);
  }
  return peaks;
}

}  // namespace

TEST_SUITE("interference") {

TEST_CASE("fringe spacing near the centre") {
  const auto config = reference_config();
  const auto grid = linspace(-60e-6, 60e-6, 12001);
  const auto pattern = pattern_analytic(config, kSI, kFigureTime, grid);
  const auto peaks = local_maxima(pattern.x, pattern.density);
  REQUIRE(peaks.size() == 3);
  CHECK(std::abs(peaks[1]) < 1e-8);
  // The Gaussian envelope pulls the side peaks in by about 1 um, so the
  // peak-to-peak distance sits a few percent under Lambda = 44.1 um.
  const double spacing = 0.5 * (peaks[2] - peaks[0]);
  CHECK(std::abs(spacing - 44.1e-6) / 44.1e-6 < 0.03);
  CHECK(spacing < pattern.meta.fringe_spacing_Lambda);
}

TEST_CASE("unmonitored limit is a fully coherent two-slit pattern") {
  auto config = reference_config();
  config.electron_velocity = 1e16;  // alpha ~ 1e-9
  const double t = kFigureTime;
  const auto grid = wide_grid(config, t, 4001);
  const auto pattern = pattern_analytic(config, kSI, t, grid);
  CHECK(pattern.meta.visibility_V > 1.0 - 1e-15);
  const double centre = pattern_terms(config, kSI, t, 0.0).total();
  for (double v : pattern.density) CHECK(v <= centre);
  // dark fringes reach zero at full coherence
  const auto terms = pattern_terms(config, kSI, t, 0.5 * fringe_spacing(config, 0.0, t));
  CHECK(std::abs(terms.total()) < 1e-3 * centre);
}

TEST_CASE("analytic pattern equals the proton-coordinate quadrature") {
  for (double alpha : {0.6, 1.8}) {
    const auto config = with_alpha(reference_config(), alpha);
    for (double t : {2e-12, kFigureTime}) {
      const auto grid = wide_grid(config, t, 2001);
      const auto analytic = pattern_analytic(config, kSI, t, grid);
      const auto oracle = pattern_numeric_oracle(config, kSI, t, grid);
      CHECK(relative_l2(analytic.density, oracle.density) < 1e-8);
      CHECK(std::abs(trapezoid(oracle.x, oracle.density) - 1.0) < 1e-6);
      CHECK(std::abs(trapezoid(analytic.x, analytic.density) - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("repulsive coupling also matches the quadrature") {
  auto config = reference_config(100e-9);
  config.electron_width = 60e-9;
  const ModelOptions repulsive{ImpulseModel::asymptotic, Coupling::repulsive};
  const double t = 5e-12;
  const auto grid = wide_grid(config, t, 2001, repulsive);
  const auto analytic = pattern_analytic(config, kSI, t, grid, {repulsive, ParameterForm::exact});
  const auto oracle = pattern_numeric_oracle(config, kSI, t, grid, {repulsive});
  CHECK(relative_l2(analytic.density, oracle.density) < 1e-8);
  const auto attractive = pattern_analytic(config, kSI, t, grid);
  CHECK(relative_l2(analytic.density, attractive.density) > 1e-3);
}

TEST_CASE("finite-tau impulse propagates into the pattern") {
  const auto config = reference_config();
  const ModelOptions finite{ImpulseModel::finite_tau, Coupling::attractive};
  const auto grid = wide_grid(config, kFigureTime, 2001, finite);
  const auto analytic = pattern_analytic(config, kSI, kFigureTime, grid, {finite});
  const auto oracle = pattern_numeric_oracle(config, kSI, kFigureTime, grid, {finite});
  CHECK(relative_l2(analytic.density, oracle.density) < 1e-8);
  CHECK(analytic.meta.impulse_model == ImpulseModel::finite_tau);
}

TEST_CASE("contrast at the centre follows the visibility") {
  const auto config = with_alpha(reference_config(), 1.2);
  const std::vector<double> centre{0.0};
  const auto oracle = pattern_numeric_oracle(config, kSI, kFigureTime, centre);
  const auto terms = pattern_terms(config, kSI, kFigureTime, 0.0);
  const double contrast = oracle.density[0] / terms.direct - 1.0;
  CHECK(std::abs(contrast - 0.423861829421286217) < 1e-3);
}

TEST_CASE("pattern is mirror symmetric for either coupling sign") {
  auto config = reference_config();
  config.electron_width = 45e-9;
  for (auto coupling : {Coupling::attractive, Coupling::repulsive}) {
    const PatternOptions options{{ImpulseModel::asymptotic, coupling}, ParameterForm::exact};
    for (double t : {1e-12, 3e-11, kFigureTime}) {
      for (double x : linspace(0.0, pattern_half_width(config, kSI, t), 97)) {
        const double right = pattern_terms(config, kSI, t, x, options).total();
        const double left = pattern_terms(config, kSI, t, -x, options).total();
        CHECK(std::abs(right - left) <= 1e-12 * std::max(right, 1e-300));
      }
    }
  }
}

TEST_CASE("interference term scales with the visibility") {
  const double t = kFigureTime;
  auto config = reference_config(50e-9);
  const auto first = pattern_terms(config, kSI, t, 0.0);
  const auto p1 = derive(config);
  for (double Delta : {100e-9, 210e-9, 400e-9}) {
    config.proton_width = Delta;
    const auto terms = pattern_terms(config, kSI, t, 0.0);
    const auto p = derive(config);
    const double ratio = (terms.interference / (p.normalization_N * p.normalization_N)) /
                         (first.interference / (p1.normalization_N * p1.normalization_N));
    CHECK(std::abs(ratio / (p.visibility_V / p1.visibility_V) - 1.0) < 1e-10);
  }
}

TEST_CASE("large-time parameter forms") {
  const auto config = reference_config();
  const auto grid = linspace(-120e-6, 120e-6, 2001);
  const auto exact = pattern_analytic(config, kSI, kFigureTime, grid);
  const auto approx =
      pattern_analytic(config, kSI, kFigureTime, grid, {{}, ParameterForm::large_time});
  CHECK(relative_l2(approx.density, exact.density) < 1e-3);
  CHECK(relative_l2(approx.density, exact.density) > 0.0);
}

TEST_CASE("joint distribution marginals and normalization") {
  for (double alpha : {0.6, 1.8}) {
    const auto config = with_alpha(reference_config(), alpha);
    const auto xs = wide_grid(config, kFigureTime, 801);
    const double kw = momentum_half_width(config, kSI);
    const auto ks = linspace(-kw, kw, 401);
    const auto joint = joint_xk_distribution(config, kSI, kFigureTime, xs, ks);

    std::vector<double> x_marginal(xs.size());
    std::vector<double> row(ks.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < ks.size(); ++j) row[j] = joint.at(i, j);
      x_marginal[i] = trapezoid(ks, row);
    }
    const auto pattern = pattern_analytic(config, kSI, kFigureTime, xs);
    CHECK(relative_l2(x_marginal, pattern.density) < 1e-6);
    CHECK(std::abs(trapezoid(xs, x_marginal) - 1.0) < 1e-5);

    // Lobe centres from the k-marginal: E[k^2] = (P/hbar)^2 + 1 / (2 Delta^2).
    std::vector<double> column(xs.size());
    std::vector<double> k_marginal(ks.size());
    std::vector<double> k2_weighted(ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j) {
      for (std::size_t i = 0; i < xs.size(); ++i) column[i] = joint.at(i, j);
      k_marginal[j] = trapezoid(xs, column);
      k2_weighted[j] = ks[j] * ks[j] * k_marginal[j];
    }
    const double k2 = trapezoid(ks, k2_weighted) / trapezoid(ks, k_marginal);
    const double lobe = std::sqrt(k2 - 0.5 / (config.proton_width * config.proton_width));
    const double velocity = kSI.reduced_planck() * lobe / kSI.proton_mass();
    CHECK(velocity == doctest::Approx(derive(config).proton_velocity).epsilon(1e-4));
    CHECK(std::abs(velocity - (alpha == 0.6 ? 0.139 : 0.42)) < 0.01);
  }
}

TEST_CASE("impulsive Coulomb visibility") {
  const auto reference = reference_config();
  const auto refined = impulsive_visibility(reference);
  CHECK(refined.visibility == doctest::Approx(0.806331620331577034).epsilon(1e-12));
  CHECK(refined.visibility > derive(reference).visibility_V);
  CHECK(refined.phase_coefficient_a * reference.slit_separation * reference.slit_separation ==
        doctest::Approx(interaction_alpha(reference)).epsilon(1e-15));

  auto thin = reference;
  thin.electron_width = 1e-15;
  CHECK(impulsive_visibility(thin).visibility ==
        doctest::Approx(derive(thin).visibility_V).epsilon(1e-12));

  const auto finite = impulsive_visibility(reference, kSI, ImpulseModel::finite_tau);
  CHECK(finite.phase_coefficient_a < refined.phase_coefficient_a);
  CHECK(finite.visibility > refined.visibility);
}

TEST_CASE("argument checks") {
  const auto config = reference_config();
  const std::vector<double> bad{0.0, 1e-6, 5e-7};
  CHECK_THROWS_AS(pattern_analytic(config, kSI, kFigureTime, bad), std::invalid_argument);
  CHECK_THROWS_AS(pattern_analytic(config, kSI, 0.0, linspace(0, 1e-6, 3)), std::invalid_argument);
  CHECK_THROWS_AS(pattern_numeric_oracle(config, kSI, kFigureTime, bad), std::invalid_argument);
  CHECK_THROWS_AS(joint_xk_distribution(config, kSI, kFigureTime, linspace(0, 1e-6, 3), bad),
                  std::invalid_argument);
  OracleOptions zero;
  zero.quad_tolerance = 0.0;
  CHECK_THROWS_AS(pattern_numeric_oracle(config, kSI, kFigureTime, linspace(0, 1e-6, 3), zero),
                  std::invalid_argument);
}

}  // TEST_SUITE
