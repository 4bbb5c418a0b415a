#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "cpwall/errors.hpp"
#include "cpwall/units.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cpwall;
using namespace cpwall::units;
using testutil::rel_err;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_SUITE("units") {

TEST_CASE("room-temperature thermal length") {
  const PhysicalConstants c;
  CHECK(std::abs(thermal_length_um(300.0, c) - 7.63) <= 0.05);
  CHECK(std::isinf(thermal_length_um(0.0, c)));
  CHECK_THROWS_AS(thermal_length_um(-1.0, c), DomainError);
  CHECK(rel_err(temperature_from_thermal_length(thermal_length_um(300.0, c), c), 300.0) < 1e-14);
}

TEST_CASE("round trips through SI") {
  const PhysicalConstants c;
  for (double v : {1e-9, 3.7e-3, 1.0, 42.0, 6.02e5}) {
    CHECK(rel_err(energy_from_si(energy_to_si(v, c), c), v) < 1e-12);
    CHECK(rel_err(length_from_si(length_to_si(v)), v) < 1e-12);
    CHECK(rel_err(alpha_um3_to_nm3(alpha_nm3_to_um3(v)), v) < 1e-12);
  }
  // 1 hbar*c/um = 0.1973269804 eV
  CHECK(energy_to_si(1.0, c) == doctest::Approx(0.1973269804 * kJoulePerEv).epsilon(1e-14));
  CHECK(alpha_nm3_to_um3(1.0) == doctest::Approx(1e-9).epsilon(1e-15));
}

TEST_CASE("pinned config matches the defaults") {
  const auto pinned = load_constants(std::string(CPWALL_SOURCE_DIR) + "/config/constants.conf");
  const PhysicalConstants defaults;
  CHECK(pinned.hbar_c_ev_nm == defaults.hbar_c_ev_nm);
  CHECK(pinned.k_b_ev_per_k == defaults.k_b_ev_per_k);
  CHECK(pinned.default_theta == defaults.default_theta);
}

TEST_CASE("config parsing") {
  const auto ok = write_temp("cpwall_ok.conf", "# comment\n\nhbar_c_ev_nm = 200  # trailing\ndefault_theta=50\n");
  const auto c = load_constants(ok);
  CHECK(c.hbar_c_ev_nm == 200.0);
  CHECK(c.default_theta == 50.0);
  CHECK(c.k_b_ev_per_k == PhysicalConstants{}.k_b_ev_per_k);

  CHECK_THROWS_AS(load_constants(write_temp("cpwall_bad1.conf", "speed_of_light = 1\n")), DomainError);
  CHECK_THROWS_AS(load_constants(write_temp("cpwall_bad2.conf", "hbar_c_ev_nm 197\n")), DomainError);
  CHECK_THROWS_AS(load_constants(write_temp("cpwall_bad3.conf", "hbar_c_ev_nm = abc\n")), DomainError);
  CHECK_THROWS_AS(load_constants(write_temp("cpwall_bad4.conf", "default_theta = 5\n")), DomainError);
  CHECK_THROWS_AS(load_constants("/nonexistent/cpwall.conf"), DomainError);
}

TEST_CASE("CPWALL_CONFIG overrides the defaults") {
  const auto path = write_temp("cpwall_env.conf", "default_theta = 30\n");
  ::setenv("CPWALL_CONFIG", path.c_str(), 1);
  CHECK(constants_from_environment().default_theta == 30.0);
  ::unsetenv("CPWALL_CONFIG");
  CHECK(constants_from_environment().default_theta == 100.0);
}

}  // TEST_SUITE
