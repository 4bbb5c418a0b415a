#pragma once

// Shared value types. Lengths are in any fixed unit L chosen by the caller;
// k0 is then in 1/L, alpha0 in L^3, and every energy returned by the library
// is in units of hbar*c/L (hbar = c = 1 internally).

#include <limits>
#include <optional>
#include <string>

namespace cpwall {

/// Two-level atom: transition wavenumber and static polarizability.
struct AtomParams {
  double k0 = 1.0;
  double alpha0 = 1.0;

  /// Throws DomainError unless both are positive and finite.
  void validate() const;
  double lambda0() const;  // 2 pi / k0
};

enum class Regime { non_retarded, crossover, retarded };

std::string to_string(Regime r);

/// Frozen validity thresholds of the vacuum asymptotes, in x0 = 2 k0 z.
inline constexpr double kNonRetardedMaxX0 = 0.1;
/// z > 1.3 lambda0, i.e. x0 > 2.6 * 2 pi.
inline constexpr double kRetardedMinX0 = 2.6 * 2.0 * 3.14159265358979323846;

/// Smallest accepted k0 * lambda_T.
inline constexpr double kMinTheta = 10.0;

/// Thermal state of the field. theta = k0 lambda_T; a vacuum environment
/// has lambda_T = theta = infinity and no thermal contribution.
struct ThermalEnvironment {
  std::optional<double> temperature_kelvin;
  double lambda_T = std::numeric_limits<double>::infinity();
  double theta = std::numeric_limits<double>::infinity();

  bool is_vacuum() const { return !(lambda_T < std::numeric_limits<double>::infinity()); }

  static ThermalEnvironment vacuum();
  /// lambda_T = theta / k0. Throws DomainError for theta < kMinTheta.
  static ThermalEnvironment from_theta(const AtomParams& atom, double theta);
  static ThermalEnvironment from_thermal_length(const AtomParams& atom, double lambda_T);
};

/// Dimensionless coordinates of one atom-wall configuration.
struct GeometryPoint {
  double x0 = 0.0;             // 2 k0 z
  double z_over_lambda0 = 0.0;  // k0 z / 2 pi
  double eta = std::numeric_limits<double>::infinity();  // lambda_T / 2z
  double theta = std::numeric_limits<double>::infinity();
  Regime regime = Regime::crossover;

  static GeometryPoint make(const AtomParams& atom, const ThermalEnvironment& env, double z);
};

/// Vacuum energy with its reservoir-reaction and fluctuation parts. The
/// closed form gives only the total; the parts come from quadrature.
struct VacuumShift {
  double total = 0.0;
  double rr_part = 0.0;
  double fr_part = 0.0;
  bool parts_from_quadrature = false;
};

struct PotentialBreakdown {
  double vacuum = 0.0;
  double thermal = 0.0;
  double total = 0.0;
  std::string notes;
};

/// k0 alpha0 / (8 pi z^3): the one place where dimensions enter.
double energy_prefactor(const AtomParams& atom, double z);

/// Throws DomainError unless z is positive and finite.
void require_distance(double z, const char* what);

}  // namespace cpwall
