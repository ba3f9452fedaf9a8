#pragma once

#include <optional>
#include <string>
#include <vector>

namespace slitmon {

/// SI constants. Defaults are CODATA 2018; a custom set must supply all five.
class PhysicalConstants {
 public:
  PhysicalConstants();
  PhysicalConstants(double elementary_charge, double vacuum_permittivity,
                    double reduced_planck, double electron_mass, double proton_mass);

  static PhysicalConstants codata2018() { return {}; }

  double elementary_charge() const noexcept { return elementary_charge_; }
  double vacuum_permittivity() const noexcept { return vacuum_permittivity_; }
  double reduced_planck() const noexcept { return reduced_planck_; }
  double electron_mass() const noexcept { return electron_mass_; }
  double proton_mass() const noexcept { return proton_mass_; }

  /// e^2 / (4 pi eps0), the Coulomb coupling in J*m.
  double coulomb_coupling() const noexcept;

 private:
  double elementary_charge_;
  double vacuum_permittivity_;
  double reduced_planck_;
  double electron_mass_;
  double proton_mass_;
};

/// Monitored double-slit setup in SI units.
///
/// The electron speed is always stored as a velocity; configs given by
/// kinetic energy are resolved through velocity_from_energy().
struct ExperimentConfig {
  double slit_separation = 0.0;   // d
  double electron_width = 0.0;    // delta
  double proton_width = 0.0;      // Delta
  double electron_velocity = 0.0; // v
  double screen_distance = 0.0;   // D
  std::optional<double> interaction_time;  // tau; 10 d / v when absent
};

/// Raw user input: exactly one of velocity or kinetic energy.
struct ConfigInput {
  double slit_separation = 0.0;
  double electron_width = 0.0;
  double proton_width = 0.0;
  std::optional<double> electron_velocity;
  std::optional<double> kinetic_energy_ev;
  double screen_distance = 0.0;
  std::optional<double> interaction_time;
};

/// Selects the finite-tau impulse or its tau -> infinity limit.
enum class ImpulseModel { asymptotic, finite_tau };

/// Every scalar derived from a config. Lambda and A are the exact forms at T.
struct DerivedParams {
  double impulse_P = 0.0;
  double alpha = 0.0;
  double recoil_velocity_v0 = 0.0;
  double proton_velocity = 0.0;  // P / M
  double visibility_V = 0.0;
  double normalization_N = 0.0;
  double propagation_time_T = 0.0;
  double spreading_time = 0.0;
  double fringe_spacing_Lambda = 0.0;
  double envelope_factor_A = 0.0;
  double interaction_time_tau = 0.0;
  ImpulseModel impulse_model = ImpulseModel::asymptotic;
};

struct RegimeWarning {
  std::string name;
  std::string message;
  double value = 0.0;      // left-hand side of the violated "much less than"
  double threshold = 0.0;  // right-hand side it was compared against
};

/// Factors turning each "much less than" assumption into a warning threshold.
namespace regime {
inline constexpr double small_scattering = 0.1;      // P >= 0.1 m v
inline constexpr double short_interaction = 0.1;     // tau >= 0.1 m delta^2 / hbar
inline constexpr double separated_paths = 0.5;       // sqrt(delta^2 + Delta^2) >= 0.5 d
inline constexpr double narrow_slits = 0.5;          // delta >= 0.5 d
}  // namespace regime

/// Throws std::invalid_argument unless every length, velocity and time is
/// strictly positive and finite.
void validate(const ExperimentConfig& config);

/// Resolves velocity/energy and validates.
ExperimentConfig resolve(const ConfigInput& input,
                         const PhysicalConstants& constants = {});

double velocity_from_energy(double energy_ev, const PhysicalConstants& constants = {});

/// tau, defaulting to 10 d / v.
double interaction_time(const ExperimentConfig& config);

/// (v tau / d) / sqrt(1 + (v tau / d)^2): fraction of the asymptotic impulse
/// accumulated over the interaction window.
double saturation_factor(const ExperimentConfig& config);

/// Transverse Coulomb impulse. Defaults to the finite-tau closed form.
double impulse(const ExperimentConfig& config, const PhysicalConstants& constants = {},
               ImpulseModel model = ImpulseModel::finite_tau);

/// alpha = P d / hbar. Defaults to the asymptotic convention e^2 / (pi eps0 hbar v).
double interaction_alpha(const ExperimentConfig& config,
                         const PhysicalConstants& constants = {},
                         ImpulseModel model = ImpulseModel::asymptotic);

/// Velocity at which the asymptotic alpha equals the requested value.
double velocity_for_alpha(double alpha, const PhysicalConstants& constants = {});

/// Copy of config with the electron velocity chosen to give the requested
/// asymptotic alpha. An explicit tau is kept; the default tau follows v.
ExperimentConfig with_alpha(const ExperimentConfig& config, double alpha,
                            const PhysicalConstants& constants = {});

/// exp(-P^2 Delta^2 / hbar^2).
double visibility(double impulse_P, double proton_width, double reduced_planck);

/// (1 + exp(-d^2 / 4 delta^2) exp(-P^2 delta^2 / hbar^2) V)^(-1/2).
double normalization(const ExperimentConfig& config, double impulse_P,
                     const PhysicalConstants& constants = {});

enum class ParameterForm { exact, large_time };

/// Packet spreading factor A(t) = delta^2 / (delta^4 + (hbar t / m)^2).
double envelope_factor(const ExperimentConfig& config, double t,
                       const PhysicalConstants& constants = {},
                       ParameterForm form = ParameterForm::exact);

/// Fringe spacing Lambda(t). The impulse is signed; the exact form carries
/// the 2 P delta^4 / hbar term.
double fringe_spacing(const ExperimentConfig& config, double impulse_P, double t,
                      const PhysicalConstants& constants = {},
                      ParameterForm form = ParameterForm::exact);

DerivedParams derive(const ExperimentConfig& config, const PhysicalConstants& constants = {},
                     ImpulseModel model = ImpulseModel::asymptotic);

std::vector<RegimeWarning> validate_regime(const ExperimentConfig& config,
                                           const PhysicalConstants& constants = {});

/// The 600 eV, d = 272 nm, delta = 20 nm, D = 240 mm setup.
ExperimentConfig reference_config(double proton_width = 210e-9,
                             const PhysicalConstants& constants = {});

}  // namespace slitmon
