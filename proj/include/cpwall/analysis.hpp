#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cpwall/types.hpp"

namespace cpwall::analysis {

struct EquilibriumResult {
  double z_star_over_lambdaT = 0.0;
  bool curvature_positive = false;  // stable when true
  double curvature = 0.0;           // d2V/du2 at the root, in alpha0 / lambda_T^4 units
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

/// Step of the 5-point derivative, in units of lambda_T.
inline constexpr double kDerivativeStep = 1e-4;
/// Target precision of the root in z / lambda_T.
inline constexpr double kRootTolerance = 1e-6;

/// dV/du from a 5-point central difference with step h.
double five_point_derivative(const std::function<double(double)>& f, double u, double h = kDerivativeStep);

/// Zero of dV/du on [lo, hi] (TOMS 748). Throws NoBracketError without a sign change.
EquilibriumResult find_equilibrium(const std::function<double(double)>& v_of_u, double lo, double hi);

/// Stable point of the exact V_T on [lo, hi] (u = z / lambda_T).
EquilibriumResult find_thermal_equilibrium(const AtomParams& atom, const ThermalEnvironment& env,
                                           double lo = 0.3, double hi = 0.7);

/// Smallest z (same length unit as lambda_T) where |V_T| = |V0|, searched on
/// u in [0.5, 50]. Throws NoBracketError if the thermal part never overtakes.
double dominance_crossover(const AtomParams& atom, const ThermalEnvironment& env);

struct QuadraticFit {
  double u_lo = 0.0;
  double u_hi = 0.0;
  double a = 0.0;  // V ~ a + b u + c u^2, V in alpha0 / lambda_T^4
  double b = 0.0;
  double c = 0.0;
  double rms_residual_relative = 0.0;  // rms residual / (max V - min V)
  int points = 0;

  double vertex() const { return -b / (2.0 * c); }
};

inline constexpr int kMinFitPoints = 20;

/// Unweighted least squares; throws IllConditionedError on a degenerate sample.
QuadraticFit fit_quadratic(const std::vector<double>& u, const std::vector<double>& v);

/// Fits the exact V_T sampled at `points` equally spaced u in [u_lo, u_hi] (inside (0, 1.5)).
QuadraticFit quadratic_fit(const AtomParams& atom, const ThermalEnvironment& env, double u_lo, double u_hi,
                           int points = 41);

struct RegimeErrorRow {
  double z = 0.0;
  double x0 = 0.0;
  double u = 0.0;  // z / lambda_T, 0 in vacuum
  double vacuum = 0.0;
  double thermal = 0.0;
  double total = 0.0;
  // Relative errors against the exact values; empty outside an approximation's domain.
  std::optional<double> nonretarded;
  std::optional<double> retarded;
  std::optional<double> short_leading;
  std::optional<double> long_expansion;
  std::optional<double> lifshitz;
};

/// One row per z (ascending).
std::vector<RegimeErrorRow> regime_error_table(const AtomParams& atom, const ThermalEnvironment& env,
                                               const std::vector<double>& z_grid);

}  // namespace cpwall::analysis
