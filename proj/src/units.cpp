#include "cpwall/units.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "cpwall/errors.hpp"

namespace cpwall::units {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void PhysicalConstants::validate() const {
  if (!(hbar_c_ev_nm > 0.0) || !(k_b_ev_per_k > 0.0) || !(default_theta >= 10.0)) {
    throw DomainError("constants: hbar_c and k_B must be positive, default_theta >= 10");
  }
}

PhysicalConstants load_constants(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("constants: cannot open " + path);
  PhysicalConstants c;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError(path + ":" + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string text = trim(line.substr(eq + 1));
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw DomainError(path + ":" + std::to_string(number) + ": bad number '" + text + "'");
    }
    if (key == "hbar_c_ev_nm") {
      c.hbar_c_ev_nm = value;
    } else if (key == "k_b_ev_per_k") {
      c.k_b_ev_per_k = value;
    } else if (key == "default_theta") {
      c.default_theta = value;
    } else {
      throw DomainError(path + ":" + std::to_string(number) + ": unknown key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

PhysicalConstants constants_from_environment() {
  const char* path = std::getenv("CPWALL_CONFIG");
  if (path == nullptr || *path == '\0') return {};
  return load_constants(path);
}

double thermal_length_um(double temperature_kelvin, const PhysicalConstants& c) {
  if (!(temperature_kelvin >= 0.0) || !std::isfinite(temperature_kelvin)) {
    throw DomainError("temperature must be >= 0 K");
  }
  if (temperature_kelvin == 0.0) return std::numeric_limits<double>::infinity();
  return c.hbar_c_ev_nm / (c.k_b_ev_per_k * temperature_kelvin) * 1e-3;
}

double temperature_from_thermal_length(double lambda_T_um, const PhysicalConstants& c) {
  if (!(lambda_T_um > 0.0)) throw DomainError("lambda_T must be positive");
  if (std::isinf(lambda_T_um)) return 0.0;
  return c.hbar_c_ev_nm / (c.k_b_ev_per_k * lambda_T_um * 1e3);
}

double energy_to_si(double natural, const PhysicalConstants& c) {
  return natural * c.hbar_c_ev_nm * 1e-3 * kJoulePerEv;
}

double energy_from_si(double joules, const PhysicalConstants& c) {
  return joules / (c.hbar_c_ev_nm * 1e-3 * kJoulePerEv);
}

double length_to_si(double um) { return um * 1e-6; }
double length_from_si(double metres) { return metres * 1e6; }
double alpha_nm3_to_um3(double nm3) { return nm3 * 1e-9; }
double alpha_um3_to_nm3(double um3) { return um3 * 1e9; }

}  // namespace cpwall::units
