#pragma once

// Brute-force quadrature reconstructions used to check the closed forms.
// Nothing here calls the Ci/si/E1 routines; integrands are built from
// elementary functions only.

#include "cpwall/types.hpp"

namespace cpwall::oracle {

struct QuadratureReport {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 0;
  double regulator_epsilon = 0.0;  // smallest Abel epsilon used, 0 when unused
  int extrapolation_steps = 0;
};

/// int_0^inf e^{-x t} / (1 + t^2) dt, split at t = 1; the tail uses u = e^{-x (t - 1)}.
QuadratureReport f_integral_oracle(double x);

enum class VacuumPart { rr, fr, total };

struct VacuumQuadratureOptions {
  double eps0 = 0.1;             // first Abel epsilon, in units of 1/(2z)
  int levels = 6;                // eps0, eps0/2, ...
  double pole_half_width = 0.0;  // in x = 2kz; 0 picks min(x0/2, 1)
};

/// (1/pi) int_0^inf k^3 alpha(k) G(2kz) dk with alpha = alpha(-) (rr),
/// alpha(+) (fr, principal value) or their pole-free sum (total).
QuadratureReport vacuum_split_quadrature(const AtomParams& atom, double z, VacuumPart part,
                                         const VacuumQuadratureOptions& options = {});

/// Closed-form total, with rr/fr parts from quadrature when requested.
VacuumShift vacuum_shift(const AtomParams& atom, double z, bool with_parts = true);

struct ThermalQuadratureOptions {
  bool dispersion = true;        // false replaces alpha(+) by alpha0
  double pole_half_width = 0.0;  // in x = 2kz; 0 picks min(x0/4, 1)
  double cutoff = 80.0;          // integrate to eta x = max(cutoff, theta + 40)
};

/// (2/pi) PV int_0^inf k^3 alpha(+)(k) G(2kz) / (e^{k lambda_T} - 1) dk.
QuadratureReport thermal_quadrature(const AtomParams& atom, const ThermalEnvironment& env, double z,
                                    const ThermalQuadratureOptions& options = {});

/// int_0^inf x^n / (e^x - 1) dx = n! zeta(n + 1).
double bose_integral(int n);
QuadratureReport bose_integral_quadrature(int n);

}  // namespace cpwall::oracle
