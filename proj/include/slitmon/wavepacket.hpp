#pragma once

#include <complex>

#include "slitmon/params.hpp"

namespace slitmon {

/// One-dimensional Gaussian packet psi(x, 0) = (pi w^2)^(-1/4)
/// exp(-(x - x0)^2 / 2 w^2 + i p0 x / hbar).
struct GaussianPacket {
  double width = 0.0;
  double center = 0.0;
  double mean_momentum = 0.0;
  double mass = 0.0;
};

/// Freely evolved amplitude psi(x, t) in m^(-1/2).
///
/// Uses the closed form with complex width w^2 + i hbar t / m; the square root
/// is the principal branch, which never meets its cut because the real part
/// w^2 stays positive. The dynamical phase exp(-i p0^2 t / 2 m hbar) is kept
/// so superpositions of packets with different p0 interfere correctly.
std::complex<double> evolve_at(const GaussianPacket& packet, double x, double t,
                               const PhysicalConstants& constants = {});

/// Real momentum-space amplitude pi^(-1/4) w^(1/2) exp(-w^2 (k - p/hbar)^2 / 2)
/// of a Gaussian with position width w and mean momentum p. With p = +P this
/// is the "up" proton state, with p = -P the "down" one.
double momentum_state(double width, double mean_momentum, double k,
                      const PhysicalConstants& constants = {});

/// Overlap of the up and down proton states, exp(-P^2 Delta^2 / hbar^2).
/// Identical to averaging the random phase exp(-2 i P X / hbar) over |psi_p|^2.
double overlap_visibility(double proton_width, double impulse_P,
                          const PhysicalConstants& constants = {});

}  // namespace slitmon
