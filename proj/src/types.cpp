#include "cpwall/types.hpp"

#include <cmath>
#include <string>

#include "cpwall/errors.hpp"
#include "cpwall/specfun.hpp"
#include "cpwall/vacuum.hpp"

namespace cpwall {

void AtomParams::validate() const {
  if (!(k0 > 0.0) || !std::isfinite(k0)) throw DomainError("AtomParams: k0 must be positive and finite");
  if (!(alpha0 > 0.0) || !std::isfinite(alpha0)) {
    throw DomainError("AtomParams: alpha0 must be positive and finite");
  }
}

double AtomParams::lambda0() const { return 2.0 * specfun::kPi / k0; }

std::string to_string(Regime r) {
  switch (r) {
    case Regime::non_retarded: return "non_retarded";
    case Regime::crossover: return "crossover";
    case Regime::retarded: return "retarded";
  }
  return "unknown";
}

ThermalEnvironment ThermalEnvironment::vacuum() {
  ThermalEnvironment env;
  env.temperature_kelvin = 0.0;
  return env;
}

ThermalEnvironment ThermalEnvironment::from_theta(const AtomParams& atom, double theta) {
  atom.validate();
  if (!std::isfinite(theta) || theta < kMinTheta) {
    throw DomainError("ThermalEnvironment: theta = k0 lambda_T must be >= 10, got " + std::to_string(theta));
  }
  ThermalEnvironment env;
  env.theta = theta;
  env.lambda_T = theta / atom.k0;
  return env;
}

ThermalEnvironment ThermalEnvironment::from_thermal_length(const AtomParams& atom, double lambda_T) {
  atom.validate();
  if (!(lambda_T > 0.0)) throw DomainError("ThermalEnvironment: lambda_T must be positive");
  if (std::isinf(lambda_T)) return vacuum();
  ThermalEnvironment env = from_theta(atom, atom.k0 * lambda_T);
  env.lambda_T = lambda_T;
  return env;
}

GeometryPoint GeometryPoint::make(const AtomParams& atom, const ThermalEnvironment& env, double z) {
  atom.validate();
  require_distance(z, "GeometryPoint");
  GeometryPoint g;
  g.x0 = 2.0 * atom.k0 * z;
  g.z_over_lambda0 = atom.k0 * z / (2.0 * specfun::kPi);
  g.theta = env.theta;
  g.eta = env.lambda_T / (2.0 * z);
  g.regime = classify_regime(g.x0);
  return g;
}

double energy_prefactor(const AtomParams& atom, double z) {
  return atom.k0 * atom.alpha0 / (8.0 * specfun::kPi * z * z * z);
}

void require_distance(double z, const char* what) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw DomainError(std::string(what) + ": z must be positive and finite");
  }
}

}  // namespace cpwall
