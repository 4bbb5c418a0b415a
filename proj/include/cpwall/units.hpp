#pragma once

// Physical constants and conversions between laboratory units and the
// library's hbar = c = 1 convention (lengths in micrometres).

#include <string>

namespace cpwall::units {

struct PhysicalConstants {
  double hbar_c_ev_nm = 197.3269804;
  double k_b_ev_per_k = 8.617333262e-5;
  double default_theta = 100.0;

  void validate() const;
};

/// Joules per electronvolt (exact in the SI).
inline constexpr double kJoulePerEv = 1.602176634e-19;

/// Reads flat `key = value` lines; '#' starts a comment. Unknown keys and
/// malformed lines throw DomainError.
PhysicalConstants load_constants(const std::string& path);

/// Defaults, overridden by the file named in CPWALL_CONFIG when set.
PhysicalConstants constants_from_environment();

/// lambda_T = hbar c / (k_B T), in micrometres. Infinite at T = 0.
double thermal_length_um(double temperature_kelvin, const PhysicalConstants& c);
/// Inverse of thermal_length_um.
double temperature_from_thermal_length(double lambda_T_um, const PhysicalConstants& c);

/// Energy in hbar*c / um  <->  joules.
double energy_to_si(double natural, const PhysicalConstants& c);
double energy_from_si(double joules, const PhysicalConstants& c);

/// Lengths: micrometres <-> metres.
double length_to_si(double um);
double length_from_si(double metres);

/// Polarizability volume: nm^3 <-> um^3.
double alpha_nm3_to_um3(double nm3);
double alpha_um3_to_nm3(double um3);

}  // namespace cpwall::units
