#include <doctest.h>

#include <cstdio>
#include <string>

#include "slitmon/config_io.hpp"

using namespace slitmon;

namespace {

std::string key_of(const std::string& json) {
  try {
    (void)parse_config(json);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<accepted>";
}

}  // namespace

TEST_SUITE("config_io") {

TEST_CASE("energy and velocity forms resolve identically") {
  const auto by_energy = resolve(parse_config(R"({
    "slit_separation_d": 272e-9, "electron_width_delta": 20e-9,
    "proton_width_Delta": 210e-9, "kinetic_energy_ev": 600, "screen_distance_D": 0.24})"));
  char velocity[40];
  std::snprintf(velocity, sizeof velocity, "%.17g", velocity_from_energy(600.0));
  const auto by_velocity = resolve(parse_config(
      std::string(R"({"slit_separation_d": 272e-9, "electron_width_delta": 20e-9,
    "proton_width_Delta": 210e-9, "screen_distance_D": 0.24, "electron_velocity_v": )") +
      velocity + "}"));
  CHECK(by_energy.electron_velocity == by_velocity.electron_velocity);
  CHECK(to_json(by_energy).dump() == to_json(by_velocity).dump());
}

TEST_CASE("schema violations name the offending key") {
  const std::string base = R"("slit_separation_d": 272e-9, "electron_width_delta": 20e-9,
      "proton_width_Delta": 210e-9, "screen_distance_D": 0.24)";
  CHECK(key_of("{" + base + R"(, "electron_velocity_v": 1e7})") == "<accepted>");
  CHECK(key_of("{" + base + R"(, "electron_velocity_v": 1e7, "kinetic_energy_ev": 600})") ==
        "kinetic_energy_ev");
  CHECK(key_of("{" + base + "}") == "electron_velocity_v");
  CHECK(key_of("{" + base + R"(, "electron_velocity_v": 1e7, "slit_width": 1})") ==
        "slit_width");
  CHECK(key_of("{" + base + R"(, "electron_velocity_v": "fast"})") == "electron_velocity_v");
  CHECK(key_of("{" + base + R"(, "electron_velocity_v": 1e7, "interaction_time_tau": -1})") ==
        "interaction_time_tau");
  CHECK(key_of(R"({"electron_velocity_v": 1e7})") == "slit_separation_d");
  CHECK(key_of("[1, 2]").empty());
  CHECK(key_of("{not json").empty());
}

TEST_CASE("optional tau round-trips") {
  const auto config = resolve(parse_config(R"({
    "slit_separation_d": 1e-7, "electron_width_delta": 1e-8, "proton_width_Delta": 1e-8,
    "electron_velocity_v": 1e6, "screen_distance_D": 1, "interaction_time_tau": 3e-13})"));
  REQUIRE(config.interaction_time.has_value());
  CHECK(*config.interaction_time == 3e-13);
  CHECK(to_json(config)["interaction_time_tau"].get<double>() == 3e-13);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);
}

}  // TEST_SUITE
