#include "slitmon/quantum_info.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "slitmon/special_functions.hpp"

namespace slitmon::qinfo {

using numerics::xlog2x;

namespace {

void check_visibility(double v, const char* who) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::domain_error(std::string(who) + ": visibility must lie in [0, 1]");
  }
}

// H2 from both branch probabilities, so a tiny q keeps its relative accuracy.
double entropy_pair(double p, double q) { return -xlog2x(p) - xlog2x(q); }

// sqrt(-ln V), the proton momentum offset P Delta / hbar.
double momentum_offset(double v) { return std::sqrt(-std::log(v)); }

}  // namespace

DensityMatrix2::DensityMatrix2(std::complex<double> a00, std::complex<double> a01,
                               std::complex<double> a10, std::complex<double> a11)
    : entries_{a00, a01, a10, a11} {
  constexpr double tol = numerics::tolerance::density_matrix;
  if (std::abs(a00.imag()) > tol || std::abs(a11.imag()) > tol ||
      std::abs(a01 - std::conj(a10)) > tol) {
    throw std::invalid_argument("DensityMatrix2: matrix is not Hermitian");
  }
  if (std::abs(a00.real() + a11.real() - 1.0) > tol) {
    throw std::invalid_argument("DensityMatrix2: trace must be 1");
  }
  const double mean = 0.5 * (a00.real() + a11.real());
  const double half_gap = 0.5 * (a00.real() - a11.real());
  const double radius = std::sqrt(half_gap * half_gap + std::norm(a01));
  if (mean - radius < -tol || mean + radius > 1.0 + tol) {
    throw std::invalid_argument("DensityMatrix2: eigenvalues must lie in [0, 1]");
  }
}

std::array<double, 2> DensityMatrix2::eigenvalues() const {
  const double a = entries_[0].real();
  const double d = entries_[3].real();
  const double half_gap = 0.5 * (a - d);
  const double radius = std::sqrt(half_gap * half_gap + std::norm(entries_[1]));
  const double mean = 0.5 * (a + d);
  return {std::clamp(mean + radius, 0.0, 1.0), std::clamp(mean - radius, 0.0, 1.0)};
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p must lie in [0, 1]");
  return entropy_pair(p, 1.0 - p);
}

DensityMatrix2 electron_density_matrix(double visibility) {
  check_visibility(visibility, "electron_density_matrix");
  return {0.5, 0.5 * visibility, 0.5 * visibility, 0.5};
}

double von_neumann_entropy(const DensityMatrix2& rho) {
  const auto lambda = rho.eigenvalues();
  return -xlog2x(lambda[0]) - xlog2x(lambda[1]);
}

double info_BE(double visibility, double quad_tolerance) {
  check_visibility(visibility, "info_BE");
  if (visibility == 0.0) return 1.0;
  if (visibility == 1.0) return 0.0;
  const double u0 = momentum_offset(visibility);
  // Outcome density P(u) and posterior p(u) = 1 / (1 + exp(-4 u u0)) in u = k Delta.
  auto weighted_entropy = [u0](double u) {
    const double density =
        0.5 / std::sqrt(std::numbers::pi) *
        (std::exp(-(u - u0) * (u - u0)) + std::exp(-(u + u0) * (u + u0)));
    const double p = 1.0 / (1.0 + std::exp(-4.0 * u * u0));
    const double q = 1.0 / (1.0 + std::exp(4.0 * u * u0));
    return density * entropy_pair(p, q);
  };
  const auto r = numerics::integrate(weighted_entropy, -u0 - 8.0, u0 + 8.0, quad_tolerance);
  return 1.0 - r.value;
}

double info_M(double visibility) {
  check_visibility(visibility, "info_M");
  if (visibility == 0.0) return 1.0;
  const double u0 = momentum_offset(visibility);
  return 1.0 - entropy_pair(0.5 + 0.5 * erf(u0), 0.5 * erfc(u0));
}

double info_WZ(double visibility) {
  check_visibility(visibility, "info_WZ");
  const double cos_theta = std::sqrt(1.0 - visibility * visibility);
  const double q = 0.5 * visibility * visibility / (1.0 + cos_theta);  // (1 - cos) / 2
  return 1.0 - entropy_pair(0.5 + 0.5 * cos_theta, q);
}

double info_Q(double visibility) {
  check_visibility(visibility, "info_Q");
  return 1.0 - visibility;
}

double holevo_bound(double visibility) {
  check_visibility(visibility, "holevo_bound");
  return entropy_pair(0.5 + 0.5 * visibility, 0.5 - 0.5 * visibility);
}

double quantum_mutual_information(double visibility) {
  check_visibility(visibility, "quantum_mutual_information");
  // Proton states in the Helstrom basis: sin(theta) = V.
  const double s = visibility;
  const double c = std::sqrt(1.0 - s * s);
  const DensityMatrix2 electron(0.5, 0.0, 0.0, 0.5);
  const DensityMatrix2 proton(0.5, 0.5 * s, 0.5 * s, 0.5);
  const DensityMatrix2 up(0.5 * (1.0 + c), 0.5 * s, 0.5 * s, 0.5 * (1.0 - c));
  const DensityMatrix2 down(0.5 * (1.0 - c), 0.5 * s, 0.5 * s, 0.5 * (1.0 + c));

  // The joint state is block diagonal: (1/2) up (+) (1/2) down.
  double joint = 0.0;
  for (const auto* block : {&up, &down}) {
    for (const double lambda : block->eigenvalues()) joint -= xlog2x(0.5 * lambda);
  }
  return von_neumann_entropy(electron) + von_neumann_entropy(proton) - joint;
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::BE: return "BE";
    case Method::M: return "M";
    case Method::WZ: return "WZ";
    case Method::Q: return "Q";
    case Method::vN: return "vN";
    case Method::quantumMI: return "quantumMI";
  }
  return "?";
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods{Method::BE, Method::M,  Method::WZ,
                                           Method::Q,  Method::vN, Method::quantumMI};
  return methods;
}

Method parse_method(std::string_view name) {
  for (const Method m : all_methods()) {
    if (method_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (valid: BE, M, WZ, Q, vN, quantumMI)");
}

double information(Method method, double visibility) {
  switch (method) {
    case Method::BE: return info_BE(visibility);
    case Method::M: return info_M(visibility);
    case Method::WZ: return info_WZ(visibility);
    case Method::Q: return info_Q(visibility);
    case Method::vN: return holevo_bound(visibility);
    case Method::quantumMI: return quantum_mutual_information(visibility);
  }
  throw std::invalid_argument("information: unknown method");
}

JointTable::JointTable(std::size_t outcomes, std::vector<double> probabilities)
    : outcomes_(outcomes), p_(std::move(probabilities)) {
  constexpr double tol = numerics::tolerance::joint_table;
  if (outcomes_ == 0 || p_.size() != 2 * outcomes_) {
    throw std::invalid_argument("JointTable: expected 2 x outcomes entries");
  }
  double total = 0.0;
  for (const double p : p_) {
    if (!(p >= 0.0)) throw std::invalid_argument("JointTable: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > tol) throw std::invalid_argument("JointTable: total must be 1");
  for (std::size_t x = 0; x < 2; ++x) {
    double row = 0.0;
    for (std::size_t y = 0; y < outcomes_; ++y) row += (*this)(x, y);
    if (std::abs(row - 0.5) > tol) {
      throw std::invalid_argument("JointTable: slit marginals must both be 1/2");
    }
  }
}

JointTable joint_table(Method method, double visibility) {
  if (!(visibility > 0.0 && visibility < 1.0)) {
    throw std::domain_error("joint_table: visibility must lie strictly inside (0, 1)");
  }
  const double v = visibility;
  switch (method) {
    case Method::M: {
      const double e = erf(std::sqrt(-std::log(v)));
      const double same = 0.25 * (1.0 + e);
      const double other = 0.25 * (1.0 - e);
      return JointTable(2, {same, other, other, same});  // columns: up, down
    }
    case Method::WZ: {
      const double c = std::sqrt(1.0 - v * v);
      const double same = 0.25 * (1.0 + c);
      const double other = 0.25 * (1.0 - c);
      return JointTable(2, {same, other, other, same});
    }
    case Method::Q: {
      const double success = 0.5 * (1.0 - v);
      const double failure = 0.5 * v;
      return JointTable(3, {success, 0.0, failure, 0.0, success, failure});
    }
    default:
      throw std::invalid_argument("joint_table: only M, WZ and Q have discrete tables");
  }
}

double mutual_information(const JointTable& table) {
  double hx = 0.0;
  double hy = 0.0;
  double hxy = 0.0;
  for (std::size_t x = 0; x < 2; ++x) {
    double px = 0.0;
    for (std::size_t y = 0; y < table.outcomes(); ++y) px += table(x, y);
    hx -= xlog2x(px);
  }
  for (std::size_t y = 0; y < table.outcomes(); ++y) {
    const double py = table(0, y) + table(1, y);
    hy -= xlog2x(py);
    hxy -= xlog2x(table(0, y)) + xlog2x(table(1, y));
  }
  return hx + hy - hxy;
}

ContinuousJointDensity momentum_joint_density(double visibility) {
  if (!(visibility > 0.0 && visibility <= 1.0)) {
    throw std::domain_error("momentum_joint_density: visibility must lie in (0, 1]");
  }
  const double u0 = momentum_offset(visibility);
  const double norm = 0.5 / std::sqrt(std::numbers::pi);
  return {[u0, norm](double u) { return norm * std::exp(-(u - u0) * (u - u0)); },
          [u0, norm](double u) { return norm * std::exp(-(u + u0) * (u + u0)); },
          -u0 - 8.0, u0 + 8.0};
}

double mutual_information(const ContinuousJointDensity& density, double quad_tolerance) {
  auto outcome_entropy = [&](double u) {
    return -xlog2x(density.slit1(u) + density.slit2(u));
  };
  auto joint_entropy = [&](double u) {
    return -xlog2x(density.slit1(u)) - xlog2x(density.slit2(u));
  };
  const double hy =
      numerics::integrate(outcome_entropy, density.lower, density.upper, quad_tolerance).value;
  const double hxy =
      numerics::integrate(joint_entropy, density.lower, density.upper, quad_tolerance).value;
  return 1.0 + hy - hxy;
}

}  // namespace slitmon::qinfo
