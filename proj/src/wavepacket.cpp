#include "slitmon/wavepacket.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slitmon {

namespace {

const double kPiQuarterRoot = std::pow(std::numbers::pi, -0.25);

void check_packet(const GaussianPacket& packet) {
  if (!(packet.width > 0.0)) throw std::invalid_argument("GaussianPacket: width must be positive");
  if (!(packet.mass > 0.0)) throw std::invalid_argument("GaussianPacket: mass must be positive");
}

}  // namespace

std::complex<double> evolve_at(const GaussianPacket& packet, double x, double t,
                               const PhysicalConstants& constants) {
  check_packet(packet);
  if (!(t >= 0.0)) throw std::domain_error("evolve_at: time must be >= 0");
  const double hbar = constants.reduced_planck();
  const double w = packet.width;
  const double p0 = packet.mean_momentum;

  const std::complex<double> width_sq(w * w, hbar * t / packet.mass);
  const std::complex<double> prefactor = kPiQuarterRoot * std::sqrt(w / width_sq);
  const double offset = x - packet.center - p0 * t / packet.mass;
  const double phase = p0 * x / hbar - p0 * p0 * t / (2.0 * packet.mass * hbar);
  const std::complex<double> exponent =
      -0.5 * offset * offset / width_sq + std::complex<double>(0.0, phase);
  return prefactor * std::exp(exponent);
}

double momentum_state(double width, double mean_momentum, double k,
                      const PhysicalConstants& constants) {
  if (!(width > 0.0)) throw std::invalid_argument("momentum_state: width must be positive");
  const double shifted = width * (k - mean_momentum / constants.reduced_planck());
  return kPiQuarterRoot * std::sqrt(width) * std::exp(-0.5 * shifted * shifted);
}

double overlap_visibility(double proton_width, double impulse_P,
                          const PhysicalConstants& constants) {
  if (!(proton_width > 0.0)) {
    throw std::invalid_argument("overlap_visibility: proton width must be positive");
  }
  if (!(impulse_P >= 0.0)) {
    throw std::invalid_argument("overlap_visibility: impulse must be non-negative");
  }
  return visibility(impulse_P, proton_width, constants.reduced_planck());
}

}  // namespace slitmon
