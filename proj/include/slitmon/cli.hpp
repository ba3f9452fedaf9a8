#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slitmon/params.hpp"
#include "slitmon/quantum_info.hpp"

namespace slitmon::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Round-trip decimal form with 17 significant digits.
std::string format_double(double value);

/// Writes content to path through a temporary sibling and a rename, or to
/// `console` when path is "-". Throws std::runtime_error on I/O failure.
void write_atomically(const std::string& path, std::string_view content, std::ostream& console);

struct PatternRequest {
  std::optional<double> time;  // defaults to T = D / v
  double x_min = -120e-6;
  double x_max = 120e-6;
  std::size_t points = 2001;
  bool oracle = false;
};

struct JointRequest {
  std::optional<double> time;
  double x_min = -120e-6;
  double x_max = 120e-6;
  std::size_t x_points = 201;
  std::optional<double> k_min;  // default -(P / hbar + 8 / Delta)
  std::optional<double> k_max;
  std::size_t k_points = 201;
};

struct InfoCurveRequest {
  std::vector<qinfo::Method> methods;
  std::size_t points = 99;
};

/// DerivedParams and regime warnings as one JSON object (with trailing newline).
std::string params_report(const ExperimentConfig& config);

/// CSV `x_m,density_per_m[,oracle_density_per_m]`.
std::string pattern_csv(const ExperimentConfig& config, const PatternRequest& request);

/// CSV `x_m,k_per_m,density` in long format, x-major.
std::string joint_csv(const ExperimentConfig& config, const JointRequest& request);

/// CSV `visibility,<method>...` on V = i / (n + 1), i = 1..n.
std::string info_curve_csv(const InfoCurveRequest& request);

/// Provenance record written beside an output when --manifest is given.
std::string run_manifest(std::string_view command, const ExperimentConfig* config,
                         const std::vector<std::string>& emitted_files);

/// Entry point shared by the slitmon executable and the tests. Returns the
/// process exit code; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slitmon::cli
