#include "slitmon/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "slitmon/config_io.hpp"
#include "slitmon/interference.hpp"

namespace slitmon::cli {

namespace fs = std::filesystem;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_atomically(const std::string& path, std::string_view content, std::ostream& console) {
  if (path == "-") {
    console << content;
    console.flush();
    return;
  }
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write '" + temp.string() + "'");
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!file) throw std::runtime_error("failed writing '" + temp.string() + "'");
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw std::runtime_error("cannot move output into place at '" + path + "'");
  }
}

std::string params_report(const ExperimentConfig& config) {
  nlohmann::ordered_json report;
  report["config"] = to_json(config);
  report["derived"] = to_json(derive(config));
  report["warnings"] = to_json(validate_regime(config));
  return report.dump(2) + "\n";
}

std::string pattern_csv(const ExperimentConfig& config, const PatternRequest& request) {
  if (request.points < 2) throw std::invalid_argument("--points must be at least 2");
  const double t = request.time.value_or(derive(config).propagation_time_T);
  const auto grid = linspace(request.x_min, request.x_max, request.points);
  const auto analytic = pattern_analytic(config, {}, t, grid);
  std::vector<double> oracle;
  if (request.oracle) oracle = pattern_numeric_oracle(config, {}, t, grid).density;

  std::string csv = request.oracle ? "x_m,density_per_m,oracle_density_per_m\n"
                                   : "x_m,density_per_m\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv += format_double(grid[i]) + "," + format_double(analytic.density[i]);
    if (request.oracle) csv += "," + format_double(oracle[i]);
    csv += "\n";
  }
  return csv;
}

std::string joint_csv(const ExperimentConfig& config, const JointRequest& request) {
  if (request.x_points < 1 || request.k_points < 1) {
    throw std::invalid_argument("grid sizes must be at least 1");
  }
  const double t = request.time.value_or(derive(config).propagation_time_T);
  const double k_span = momentum_half_width(config, {});
  const auto xs = linspace(request.x_min, request.x_max, request.x_points);
  const auto ks =
      linspace(request.k_min.value_or(-k_span), request.k_max.value_or(k_span), request.k_points);
  const auto joint = joint_xk_distribution(config, {}, t, xs, ks);

  std::string csv = "x_m,k_per_m,density\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ks.size(); ++j) {
      csv += format_double(xs[i]) + "," + format_double(ks[j]) + "," +
             format_double(joint.at(i, j)) + "\n";
    }
  }
  return csv;
}

std::string info_curve_csv(const InfoCurveRequest& request) {
  if (request.points < 3) throw std::invalid_argument("--points must be at least 3");
  if (request.methods.empty()) throw std::invalid_argument("no methods requested");
  std::string csv = "visibility";
  for (const auto m : request.methods) csv += "," + std::string(qinfo::method_name(m));
  csv += "\n";
  const double denom = static_cast<double>(request.points + 1);
  for (std::size_t i = 1; i <= request.points; ++i) {
    const double v = static_cast<double>(i) / denom;
    csv += format_double(v);
    for (const auto m : request.methods) csv += "," + format_double(qinfo::information(m, v));
    csv += "\n";
  }
  return csv;
}

std::string run_manifest(std::string_view command, const ExperimentConfig* config,
                         const std::vector<std::string>& emitted_files) {
  nlohmann::ordered_json manifest;
  manifest["command"] = command;
  manifest["tool_version"] = kToolVersion;
  if (config) {
    manifest["config"] = to_json(*config);
    manifest["derived"] = to_json(derive(*config));
  } else {
    manifest["config"] = nullptr;
    manifest["derived"] = nullptr;
  }
  manifest["emitted_files"] = emitted_files;
  return manifest.dump(2) + "\n";
}

namespace {

ExperimentConfig load_resolved(const std::string& path) {
  return resolve(load_config(path));
}

void finish(std::string_view command, const ExperimentConfig* config, const std::string& out_path,
            const std::string& manifest_path, std::string_view content, std::ostream& out) {
  write_atomically(out_path, content, out);
  if (manifest_path.empty()) return;
  std::vector<std::string> emitted{out_path == "-" ? "<stdout>" : out_path, manifest_path};
  write_atomically(manifest_path, run_manifest(command, config, emitted), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monitored electron double-slit model: parameters, patterns and which-way information"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string config_path;
  std::string out_path = "-";
  std::string manifest_path;

  auto* params = app.add_subcommand("params", "Print derived parameters and regime warnings as JSON");
  params->add_option("config", config_path, "Config JSON file")->required();
  params->add_option("--manifest", manifest_path, "Write a run manifest JSON here");

  PatternRequest pattern_req;
  double pattern_time = 0.0;
  auto* pattern = app.add_subcommand("pattern", "Screen density as CSV");
  pattern->add_option("config", config_path, "Config JSON file")->required();
  auto* pattern_time_opt = pattern->add_option("--time", pattern_time, "Time in s (default D/v)");
  pattern->add_option("--xmin", pattern_req.x_min, "Grid start in m");
  pattern->add_option("--xmax", pattern_req.x_max, "Grid end in m");
  pattern->add_option("--points", pattern_req.points, "Number of grid points");
  pattern->add_flag("--oracle", pattern_req.oracle, "Add the quadrature oracle column");
  pattern->add_option("--out", out_path, "Output CSV path, - for stdout");
  pattern->add_option("--manifest", manifest_path, "Write a run manifest JSON here");

  JointRequest joint_req;
  double joint_time = 0.0;
  double k_min = 0.0;
  double k_max = 0.0;
  auto* joint = app.add_subcommand("joint", "Joint electron-position / proton-momentum density as CSV");
  joint->add_option("config", config_path, "Config JSON file")->required();
  auto* joint_time_opt = joint->add_option("--time", joint_time, "Time in s (default D/v)");
  joint->add_option("--xmin", joint_req.x_min, "x grid start in m");
  joint->add_option("--xmax", joint_req.x_max, "x grid end in m");
  joint->add_option("--xpoints", joint_req.x_points, "Number of x points");
  auto* kmin_opt = joint->add_option("--kmin", k_min, "k grid start in 1/m");
  auto* kmax_opt = joint->add_option("--kmax", k_max, "k grid end in 1/m");
  joint->add_option("--kpoints", joint_req.k_points, "Number of k points");
  joint->add_option("--out", out_path, "Output CSV path, - for stdout");
  joint->add_option("--manifest", manifest_path, "Write a run manifest JSON here");

  std::vector<std::string> method_names;
  InfoCurveRequest info_req;
  auto* info = app.add_subcommand("info-curve", "Information gain versus visibility as CSV");
  info->add_option("--methods", method_names, "Subset of BE,M,WZ,Q,vN,quantumMI")->delimiter(',');
  info->add_option("--points", info_req.points, "Number of interior visibility samples");
  info->add_option("--out", out_path, "Output CSV path, - for stdout");
  info->add_option("--manifest", manifest_path, "Write a run manifest JSON here");

  std::vector<std::string> argv_storage{"slitmon"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (params->parsed()) {
      const auto config = load_resolved(config_path);
      finish("params", &config, "-", manifest_path, params_report(config), out);
    } else if (pattern->parsed()) {
      const auto config = load_resolved(config_path);
      if (pattern_time_opt->count() > 0) pattern_req.time = pattern_time;
      finish("pattern", &config, out_path, manifest_path, pattern_csv(config, pattern_req), out);
    } else if (joint->parsed()) {
      const auto config = load_resolved(config_path);
      if (joint_time_opt->count() > 0) joint_req.time = joint_time;
      if (kmin_opt->count() > 0) joint_req.k_min = k_min;
      if (kmax_opt->count() > 0) joint_req.k_max = k_max;
      finish("joint", &config, out_path, manifest_path, joint_csv(config, joint_req), out);
    } else if (info->parsed()) {
      if (method_names.empty()) {
        info_req.methods = qinfo::all_methods();
      } else {
        for (const auto& name : method_names) info_req.methods.push_back(qinfo::parse_method(name));
      }
      finish("info-curve", nullptr, out_path, manifest_path, info_curve_csv(info_req), out);
    }
  } catch (const ConfigError& e) {
    err << "config error";
    if (!e.key().empty()) err << " [" << e.key() << "]";
    err << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace slitmon::cli
