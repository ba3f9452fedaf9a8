#include "slitmon/interference.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "slitmon/wavepacket.hpp"

namespace slitmon {

namespace {

void check_grid(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw std::invalid_argument(std::string(what) + " grid is empty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(std::string(what) + " grid must be strictly increasing");
    }
  }
}

void check_time(double t) {
  if (!(std::isfinite(t) && t > 0.0)) throw std::invalid_argument("time must be positive");
}

// The four Gaussians of the entangled state at one instant.
struct EntangledState {
  GaussianPacket electron_slit1;
  GaussianPacket electron_slit2;
  GaussianPacket proton_up;
  GaussianPacket proton_down;
  double amplitude;  // N / sqrt(2)
};

EntangledState entangled_state(const ExperimentConfig& config,
                               const PhysicalConstants& constants, double impulse) {
  const double half_d = 0.5 * config.slit_separation;
  const double m = constants.electron_mass();
  const double M = constants.proton_mass();
  const double N = normalization(config, impulse, constants);
  return {{config.electron_width, +half_d, -impulse, m},
          {config.electron_width, -half_d, +impulse, m},
          {config.proton_width, 0.0, +impulse, M},
          {config.proton_width, 0.0, -impulse, M},
          N / std::numbers::sqrt2};
}

}  // namespace

double signed_impulse(const ExperimentConfig& config, const PhysicalConstants& constants,
                      const ModelOptions& options) {
  const double P = impulse(config, constants, options.impulse_model);
  return options.coupling == Coupling::attractive ? P : -P;
}

PatternTerms pattern_terms(const ExperimentConfig& config, const PhysicalConstants& constants,
                           double t, double x, const PatternOptions& options) {
  check_time(t);
  const double P = signed_impulse(config, constants, options.model);
  const double A = envelope_factor(config, t, constants, options.form);
  const double lambda = fringe_spacing(config, P, t, constants, options.form);
  const double V = visibility(P, config.proton_width, constants.reduced_planck());
  const double N = normalization(config, P, constants);
  const double shift = P / constants.electron_mass() * t;
  const double half_d = 0.5 * config.slit_separation;

  const double prefactor = 0.5 * N * N * std::sqrt(A / std::numbers::pi);
  const double a = x + shift - half_d;
  const double b = x - shift + half_d;
  const double c = half_d - shift;
  PatternTerms terms;
  terms.direct = prefactor * (std::exp(-A * a * a) + std::exp(-A * b * b));
  terms.interference = prefactor * 2.0 * V * std::exp(-A * (x * x + c * c)) *
                       std::cos(2.0 * std::numbers::pi * x / lambda);
  return terms;
}

PatternGrid pattern_analytic(const ExperimentConfig& config,
                             const PhysicalConstants& constants, double t,
                             std::span<const double> x_grid, const PatternOptions& options) {
  check_time(t);
  check_grid(x_grid, "x");
  PatternGrid out;
  out.x.assign(x_grid.begin(), x_grid.end());
  out.density.reserve(x_grid.size());
  for (const double x : x_grid) {
    out.density.push_back(pattern_terms(config, constants, t, x, options).total());
  }
  out.time = t;
  out.meta = derive(config, constants, options.model.impulse_model);
  return out;
}

PatternGrid pattern_numeric_oracle(const ExperimentConfig& config,
                                   const PhysicalConstants& constants, double t,
                                   std::span<const double> x_grid,
                                   const OracleOptions& options) {
  check_time(t);
  check_grid(x_grid, "x");
  if (!(options.quad_tolerance > 0.0)) {
    throw std::invalid_argument("quad_tolerance must be positive");
  }
  const double P = signed_impulse(config, constants, options.model);
  const EntangledState state = entangled_state(config, constants, P);

  // Work in u = X / sigma_p with the density scaled by sqrt(A / pi), so the
  // integrand is O(1) and the tolerance is dimensionless.
  const double M = constants.proton_mass();
  const double sigma_p = 1.0 / std::sqrt(config.proton_width * config.proton_width /
                                         (std::pow(config.proton_width, 4) +
                                          std::pow(constants.reduced_planck() * t / M, 2)));
  const double drift = std::abs(P) * t / M;
  const double u_max = drift / sigma_p + 8.0;
  const double scale =
      std::sqrt(envelope_factor(config, t, constants) / std::numbers::pi);

  PatternGrid out;
  out.x.assign(x_grid.begin(), x_grid.end());
  out.density.reserve(x_grid.size());
  for (const double x : x_grid) {
    const std::complex<double> psi1 = evolve_at(state.electron_slit1, x, t, constants);
    const std::complex<double> psi2 = evolve_at(state.electron_slit2, x, t, constants);
    auto integrand = [&](double u) {
      const double X = u * sigma_p;
      const std::complex<double> total =
          state.amplitude * (psi1 * evolve_at(state.proton_up, X, t, constants) +
                             psi2 * evolve_at(state.proton_down, X, t, constants));
      return std::norm(total) * sigma_p / scale;
    };
    const auto result =
        numerics::integrate(integrand, -u_max, u_max, options.quad_tolerance);
    out.density.push_back(result.value * scale);
  }
  out.time = t;
  out.meta = derive(config, constants, options.model.impulse_model);
  return out;
}

JointGrid joint_xk_distribution(const ExperimentConfig& config,
                                const PhysicalConstants& constants, double t,
                                std::span<const double> x_grid,
                                std::span<const double> k_grid, const ModelOptions& options) {
  check_time(t);
  check_grid(x_grid, "x");
  check_grid(k_grid, "k");
  const double P = signed_impulse(config, constants, options);
  const EntangledState state = entangled_state(config, constants, P);

  std::vector<double> phi_up(k_grid.size());
  std::vector<double> phi_down(k_grid.size());
  for (std::size_t j = 0; j < k_grid.size(); ++j) {
    phi_up[j] = momentum_state(config.proton_width, +P, k_grid[j], constants);
    phi_down[j] = momentum_state(config.proton_width, -P, k_grid[j], constants);
  }

  JointGrid out;
  out.x.assign(x_grid.begin(), x_grid.end());
  out.k.assign(k_grid.begin(), k_grid.end());
  out.density.reserve(x_grid.size() * k_grid.size());
  for (const double x : x_grid) {
    const std::complex<double> psi1 = evolve_at(state.electron_slit1, x, t, constants);
    const std::complex<double> psi2 = evolve_at(state.electron_slit2, x, t, constants);
    for (std::size_t j = 0; j < k_grid.size(); ++j) {
      out.density.push_back(
          std::norm(state.amplitude * (psi1 * phi_up[j] + psi2 * phi_down[j])));
    }
  }
  out.time = t;
  return out;
}

ImpulsiveVisibility impulsive_visibility(const ExperimentConfig& config,
                                         const PhysicalConstants& constants,
                                         ImpulseModel model) {
  const double alpha = interaction_alpha(config, constants, model);
  const double d = config.slit_separation;
  const double delta = config.electron_width;
  const double Delta = config.proton_width;
  const double a2 = alpha * alpha;
  ImpulsiveVisibility out;
  out.phase_coefficient_a = alpha / (d * d);
  out.visibility =
      std::exp(-a2 * Delta * Delta / (d * d + 4.0 * a2 * delta * delta * Delta * Delta / (d * d)));
  return out;
}

double pattern_half_width(const ExperimentConfig& config, const PhysicalConstants& constants,
                          double t, const ModelOptions& options) {
  const double P = signed_impulse(config, constants, options);
  const double A = envelope_factor(config, t, constants);
  return 0.5 * config.slit_separation + std::abs(P) / constants.electron_mass() * t +
         8.0 / std::sqrt(A);
}

double momentum_half_width(const ExperimentConfig& config, const PhysicalConstants& constants,
                           const ModelOptions& options) {
  const double P = signed_impulse(config, constants, options);
  return std::abs(P) / constants.reduced_planck() + 8.0 / config.proton_width;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("trapezoid: size mismatch");
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return sum;
}

double relative_l2(std::span<const double> a, std::span<const double> ref) {
  if (a.size() != ref.size()) throw std::invalid_argument("relative_l2: size mismatch");
  double diff = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff += (a[i] - ref[i]) * (a[i] - ref[i]);
    norm += ref[i] * ref[i];
  }
  return std::sqrt(diff / norm);
}

}  // namespace slitmon
