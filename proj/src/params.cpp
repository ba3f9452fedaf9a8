#include "slitmon/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace slitmon {

namespace {

void require_positive(double value, const char* name) {
  if (!(std::isfinite(value) && value > 0.0)) {
    std::ostringstream os;
    os << name << " must be positive and finite (got " << value << ")";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

PhysicalConstants::PhysicalConstants()
    : PhysicalConstants(1.602176634e-19, 8.8541878128e-12, 1.054571817e-34,
                        9.1093837015e-31, 1.67262192369e-27) {}

PhysicalConstants::PhysicalConstants(double elementary_charge, double vacuum_permittivity,
                                     double reduced_planck, double electron_mass,
                                     double proton_mass)
    : elementary_charge_(elementary_charge),
      vacuum_permittivity_(vacuum_permittivity),
      reduced_planck_(reduced_planck),
      electron_mass_(electron_mass),
      proton_mass_(proton_mass) {
  require_positive(elementary_charge, "elementary_charge");
  require_positive(vacuum_permittivity, "vacuum_permittivity");
  require_positive(reduced_planck, "reduced_planck");
  require_positive(electron_mass, "electron_mass");
  require_positive(proton_mass, "proton_mass");
}

double PhysicalConstants::coulomb_coupling() const noexcept {
  return elementary_charge_ * elementary_charge_ /
         (4.0 * std::numbers::pi * vacuum_permittivity_);
}

void validate(const ExperimentConfig& config) {
  require_positive(config.slit_separation, "slit_separation_d");
  require_positive(config.electron_width, "electron_width_delta");
  require_positive(config.proton_width, "proton_width_Delta");
  require_positive(config.electron_velocity, "electron_velocity_v");
  require_positive(config.screen_distance, "screen_distance_D");
  if (config.interaction_time) require_positive(*config.interaction_time, "interaction_time_tau");
}

double velocity_from_energy(double energy_ev, const PhysicalConstants& constants) {
  if (!(std::isfinite(energy_ev) && energy_ev > 0.0)) {
    throw std::domain_error("velocity_from_energy: kinetic energy must be positive");
  }
  const double joules = energy_ev * constants.elementary_charge();
  return std::sqrt(2.0 * joules / constants.electron_mass());
}

ExperimentConfig resolve(const ConfigInput& input, const PhysicalConstants& constants) {
  if (input.electron_velocity.has_value() == input.kinetic_energy_ev.has_value()) {
    throw std::invalid_argument(
        "exactly one of electron_velocity_v and kinetic_energy_ev must be given");
  }
  ExperimentConfig config;
  config.slit_separation = input.slit_separation;
  config.electron_width = input.electron_width;
  config.proton_width = input.proton_width;
  if (input.kinetic_energy_ev) {
    require_positive(*input.kinetic_energy_ev, "kinetic_energy_ev");
    config.electron_velocity = velocity_from_energy(*input.kinetic_energy_ev, constants);
  } else {
    config.electron_velocity = *input.electron_velocity;
  }
  config.screen_distance = input.screen_distance;
  config.interaction_time = input.interaction_time;
  validate(config);
  return config;
}

double interaction_time(const ExperimentConfig& config) {
  return config.interaction_time.value_or(10.0 * config.slit_separation /
                                          config.electron_velocity);
}

double saturation_factor(const ExperimentConfig& config) {
  const double r = config.electron_velocity * interaction_time(config) / config.slit_separation;
  return r / std::sqrt(1.0 + r * r);
}

double impulse(const ExperimentConfig& config, const PhysicalConstants& constants,
               ImpulseModel model) {
  validate(config);
  const double asymptotic = constants.coulomb_coupling() * 4.0 /
                            (config.electron_velocity * config.slit_separation);
  return model == ImpulseModel::asymptotic ? asymptotic : asymptotic * saturation_factor(config);
}

double interaction_alpha(const ExperimentConfig& config, const PhysicalConstants& constants,
                         ImpulseModel model) {
  validate(config);
  const double e = constants.elementary_charge();
  const double asymptotic = e * e / (std::numbers::pi * constants.vacuum_permittivity() *
                                     constants.reduced_planck() * config.electron_velocity);
  return model == ImpulseModel::asymptotic ? asymptotic : asymptotic * saturation_factor(config);
}

double velocity_for_alpha(double alpha, const PhysicalConstants& constants) {
  require_positive(alpha, "alpha");
  const double e = constants.elementary_charge();
  return e * e / (std::numbers::pi * constants.vacuum_permittivity() *
                  constants.reduced_planck() * alpha);
}

ExperimentConfig with_alpha(const ExperimentConfig& config, double alpha,
                            const PhysicalConstants& constants) {
  ExperimentConfig out = config;
  out.electron_velocity = velocity_for_alpha(alpha, constants);
  validate(out);
  return out;
}

double visibility(double impulse_P, double proton_width, double reduced_planck) {
  const double u0 = impulse_P * proton_width / reduced_planck;
  return std::exp(-u0 * u0);
}

double normalization(const ExperimentConfig& config, double impulse_P,
                     const PhysicalConstants& constants) {
  const double hbar = constants.reduced_planck();
  const double half_d = 0.5 * config.slit_separation;
  const double delta = config.electron_width;
  const double pd = impulse_P * delta / hbar;
  const double overlap = std::exp(-(half_d * half_d) / (delta * delta) - pd * pd) *
                         visibility(impulse_P, config.proton_width, hbar);
  return 1.0 / std::sqrt(1.0 + overlap);
}

double envelope_factor(const ExperimentConfig& config, double t,
                       const PhysicalConstants& constants, ParameterForm form) {
  const double delta = config.electron_width;
  const double s = constants.reduced_planck() * t / constants.electron_mass();
  if (form == ParameterForm::large_time) {
    const double r = delta / s;
    return r * r;
  }
  const double d2 = delta * delta;
  return d2 / (d2 * d2 + s * s);
}

double fringe_spacing(const ExperimentConfig& config, double impulse_P, double t,
                      const PhysicalConstants& constants, ParameterForm form) {
  const double hbar = constants.reduced_planck();
  const double s = hbar * t / constants.electron_mass();
  const double d = config.slit_separation;
  if (form == ParameterForm::large_time) return 2.0 * std::numbers::pi * s / d;
  const double d4 = std::pow(config.electron_width, 4);
  return 2.0 * std::numbers::pi * (s * s + d4) / (d * s + 2.0 * impulse_P * d4 / hbar);
}

DerivedParams derive(const ExperimentConfig& config, const PhysicalConstants& constants,
                     ImpulseModel model) {
  validate(config);
  const double hbar = constants.reduced_planck();
  DerivedParams out;
  out.impulse_model = model;
  out.impulse_P = impulse(config, constants, model);
  out.alpha = interaction_alpha(config, constants, model);
  out.recoil_velocity_v0 = out.impulse_P / constants.electron_mass();
  out.proton_velocity = out.impulse_P / constants.proton_mass();
  out.visibility_V = visibility(out.impulse_P, config.proton_width, hbar);
  out.normalization_N = normalization(config, out.impulse_P, constants);
  out.propagation_time_T = config.screen_distance / config.electron_velocity;
  out.spreading_time =
      constants.electron_mass() * config.electron_width * config.electron_width / hbar;
  out.fringe_spacing_Lambda =
      fringe_spacing(config, out.impulse_P, out.propagation_time_T, constants);
  out.envelope_factor_A = envelope_factor(config, out.propagation_time_T, constants);
  out.interaction_time_tau = interaction_time(config);
  return out;
}

std::vector<RegimeWarning> validate_regime(const ExperimentConfig& config,
                                           const PhysicalConstants& constants) {
  validate(config);
  std::vector<RegimeWarning> warnings;
  auto check = [&](const char* name, const char* message, double value, double threshold) {
    if (value >= threshold) warnings.push_back({name, message, value, threshold});
  };

  const double m = constants.electron_mass();
  const double P = impulse(config, constants, ImpulseModel::asymptotic);
  check("small_scattering", "impulse P is not small compared to m v", P,
        regime::small_scattering * m * config.electron_velocity);

  const double spreading = m * config.electron_width * config.electron_width /
                           constants.reduced_planck();
  check("short_interaction",
        "interaction time tau is not small compared to the spreading time m delta^2 / hbar",
        interaction_time(config), regime::short_interaction * spreading);

  const double combined = std::hypot(config.electron_width, config.proton_width);
  check("separated_paths",
        "position uncertainty sqrt(delta^2 + Delta^2) is not small compared to d", combined,
        regime::separated_paths * config.slit_separation);

  check("narrow_slits", "electron width delta is not small compared to d",
        config.electron_width, regime::narrow_slits * config.slit_separation);
  return warnings;
}

ExperimentConfig reference_config(double proton_width, const PhysicalConstants& constants) {
  ConfigInput in;
  in.slit_separation = 272e-9;
  in.electron_width = 20e-9;
  in.proton_width = proton_width;
  in.kinetic_energy_ev = 600.0;
  in.screen_distance = 0.24;
  return resolve(in, constants);
}

}  // namespace slitmon
