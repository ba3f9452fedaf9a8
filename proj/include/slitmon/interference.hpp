#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "slitmon/numerics.hpp"
#include "slitmon/params.hpp"

namespace slitmon {

/// Sign of the electron-monitor force. The proton attracts the electron, so
/// the slit-1 packet (x = +d/2) is kicked by -P and the proton by +P;
/// `repulsive` flips both kicks, as for a negatively charged monitor.
enum class Coupling { attractive, repulsive };

struct ModelOptions {
  ImpulseModel impulse_model = ImpulseModel::asymptotic;
  Coupling coupling = Coupling::attractive;
};

struct PatternOptions {
  ModelOptions model{};
  ParameterForm form = ParameterForm::exact;
};

struct OracleOptions {
  ModelOptions model{};
  /// Absolute tolerance of each proton-coordinate integral, measured in units
  /// of the peak single-packet density sqrt(A / pi).
  double quad_tolerance = numerics::tolerance::quadrature_abs;
};

/// Electron screen density P_e(x, t) in 1/m on the sample grid.
struct PatternGrid {
  std::vector<double> x;
  std::vector<double> density;
  double time = 0.0;
  DerivedParams meta{};
};

/// Joint density over electron position x and proton wavenumber k.
/// Row-major in x: density[i * k.size() + j] belongs to (x[i], k[j]).
struct JointGrid {
  std::vector<double> x;
  std::vector<double> k;
  std::vector<double> density;
  double time = 0.0;

  double at(std::size_t i, std::size_t j) const { return density[i * k.size() + j]; }
};

/// The two parts of P_e(x, t): the sum of the single-slit envelopes and the
/// visibility-weighted interference term.
struct PatternTerms {
  double direct = 0.0;
  double interference = 0.0;

  double total() const { return direct + interference; }
};

struct ImpulsiveVisibility {
  double visibility = 0.0;
  double phase_coefficient_a = 0.0;  // 1/m^2, phase exp(-i a (x - X)^2)
};

/// Impulse with the sign carried by the slit-2 electron packet (+P when attractive).
double signed_impulse(const ExperimentConfig& config, const PhysicalConstants& constants,
                      const ModelOptions& options);

PatternTerms pattern_terms(const ExperimentConfig& config, const PhysicalConstants& constants,
                           double t, double x, const PatternOptions& options = {});

/// Closed-form screen pattern. Requires t > 0 and a strictly increasing grid.
PatternGrid pattern_analytic(const ExperimentConfig& config,
                             const PhysicalConstants& constants, double t,
                             std::span<const double> x_grid,
                             const PatternOptions& options = {});

/// Same density obtained by integrating |Psi(x, X, t)|^2 over the proton
/// coordinate X, with Psi assembled from four freely evolved Gaussians.
/// Propagates numerics::NonConvergence.
PatternGrid pattern_numeric_oracle(const ExperimentConfig& config,
                                   const PhysicalConstants& constants, double t,
                                   std::span<const double> x_grid,
                                   const OracleOptions& options = {});

/// |Psi(x, k, t)|^2 in the mixed electron-position / proton-momentum form.
JointGrid joint_xk_distribution(const ExperimentConfig& config,
                                const PhysicalConstants& constants, double t,
                                std::span<const double> x_grid,
                                std::span<const double> k_grid,
                                const ModelOptions& options = {});

/// Visibility when the interaction is treated as the quadratic phase
/// exp(-i a (x - X)^2) of an impulsive Coulomb potential.
ImpulsiveVisibility impulsive_visibility(const ExperimentConfig& config,
                                         const PhysicalConstants& constants = {},
                                         ImpulseModel model = ImpulseModel::asymptotic);

/// Half-width d/2 + |v0| t + 8 / sqrt(A) that holds the whole pattern at time t.
double pattern_half_width(const ExperimentConfig& config, const PhysicalConstants& constants,
                          double t, const ModelOptions& options = {});

/// Half-width |P| / hbar + 8 / Delta that holds the proton momentum lobes.
double momentum_half_width(const ExperimentConfig& config, const PhysicalConstants& constants,
                           const ModelOptions& options = {});

std::vector<double> linspace(double lo, double hi, std::size_t n);

double trapezoid(std::span<const double> x, std::span<const double> y);

/// ||a - ref||_2 / ||ref||_2.
double relative_l2(std::span<const double> a, std::span<const double> ref);

}  // namespace slitmon
