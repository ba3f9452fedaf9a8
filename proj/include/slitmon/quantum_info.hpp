#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "slitmon/numerics.hpp"

namespace slitmon::qinfo {

/// Hermitian, unit-trace 2x2 density matrix with eigenvalues in [0, 1].
class DensityMatrix2 {
 public:
  /// Throws std::invalid_argument when the invariants fail by more than
  /// numerics::tolerance::density_matrix.
  DensityMatrix2(std::complex<double> a00, std::complex<double> a01,
                 std::complex<double> a10, std::complex<double> a11);

  std::complex<double> operator()(std::size_t row, std::size_t col) const {
    return entries_[2 * row + col];
  }

  /// Closed-form eigenvalues, largest first, clamped into [0, 1].
  std::array<double, 2> eigenvalues() const;

 private:
  std::array<std::complex<double>, 4> entries_;
};

/// Binary Shannon entropy in bits, 0 log 0 = 0. Domain error outside [0, 1].
double binary_entropy(double p);

/// (1/2) [[1, V], [V, 1]] in the basis of the two slit states.
DensityMatrix2 electron_density_matrix(double visibility);

/// -Tr(rho log2 rho) in bits.
double von_neumann_entropy(const DensityMatrix2& rho);

// Information gain (bits) about the slit from a measurement on the proton.
// All accept V in [0, 1] and return the exact limit at the endpoints.

/// Full momentum measurement, averaged over the continuous outcome k.
double info_BE(double visibility, double quad_tolerance = numerics::tolerance::quadrature_abs);
/// Binary up/down momentum measurement.
double info_M(double visibility);
/// Minimum-error (Helstrom) discrimination of the two proton states.
double info_WZ(double visibility);
/// Unambiguous discrimination with failure probability V.
double info_Q(double visibility);
/// Holevo bound H2(1/2 + V/2).
double holevo_bound(double visibility);
/// S(rho_e) + S(rho_p) - S(rho_ep) with a perfect which-path detector attached.
double quantum_mutual_information(double visibility);

enum class Method { BE, M, WZ, Q, vN, quantumMI };

std::string_view method_name(Method method);
/// Throws std::invalid_argument on an unknown name.
Method parse_method(std::string_view name);
const std::vector<Method>& all_methods();
double information(Method method, double visibility);

/// Discrete joint distribution p(x, y) of slit x in {1, 2} and outcome y.
class JointTable {
 public:
  /// Row-major: probabilities[x * outcomes + y]. Validated on construction.
  JointTable(std::size_t outcomes, std::vector<double> probabilities);

  std::size_t outcomes() const noexcept { return outcomes_; }
  double operator()(std::size_t x, std::size_t y) const { return p_[x * outcomes_ + y]; }

 private:
  std::size_t outcomes_;
  std::vector<double> p_;
};

/// Printed joint tables for the discrete measurements (M, WZ or Q). V must lie
/// strictly inside (0, 1); the tables lose rank at the endpoints.
JointTable joint_table(Method method, double visibility);

/// H(X) + H(Y) - H(X, Y) in bits.
double mutual_information(const JointTable& table);

/// Joint densities p_x(u) of slit x and a continuous outcome u on [lower, upper].
struct ContinuousJointDensity {
  std::function<double(double)> slit1;
  std::function<double(double)> slit2;
  double lower = 0.0;
  double upper = 0.0;
};

/// Full-momentum joint density in u = k Delta for the given visibility.
ContinuousJointDensity momentum_joint_density(double visibility);

/// H(X) + H(Y) - H(X, Y) with differential entropies for Y. Assumes equal
/// slit priors, H(X) = 1.
double mutual_information(const ContinuousJointDensity& density,
                          double quad_tolerance = numerics::tolerance::quadrature_abs);

}  // namespace slitmon::qinfo
