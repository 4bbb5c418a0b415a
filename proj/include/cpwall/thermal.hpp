#pragma once

// Finite-temperature correction V_T(z) for a field in thermal equilibrium.
// Energies in hbar*c per length unit (see types.hpp).

#include <string>
#include <utility>

#include "cpwall/specfun.hpp"
#include "cpwall/types.hpp"

namespace cpwall {

using specfun::ComplexValue;

/// Regularised J0(+) / J0(-) sums and the quantities composed from them.
/// Each m-term of J0(+) carries -1/(m theta) and each term of J0(-) carries
/// +1/(m theta); these cancel in K0 and K1 and make the sums converge.
struct ThermalSeriesTerms {
  ComplexValue j0_plus;
  ComplexValue j0_minus;
  double k0_val = 0.0;  // Im(J+ - J-)
  double k1_val = 0.0;  // -x0 Re(J+ + J-)
  double p_val = 0.0;   // P(eta)
  int terms_used = 0;   // direct m-terms plus asymptotic tail terms
  double tail_bound = 0.0;
};

/// Default cap on the number of m-terms summed directly.
inline constexpr int kThermalTermCap = 100000;

/// Requires eta * x0 >= 10. Throws ConvergenceError if the tail bound cannot
/// be brought below rel_tol times the bracket within term_cap terms.
ThermalSeriesTerms j0_series(double eta, double x0, double rel_tol = 1e-8, int term_cap = kThermalTermCap);

/// (x0^2 - 2) K0 + 2 K1 - 2 x0 P(eta).
double thermal_bracket(double eta, double x0);

namespace detail {
/// The m-th terms (e^w E1(w), e^{-w} E1(-w)) with w = (m eta - i) x0, unregularised.
std::pair<ComplexValue, ComplexValue> j0_term_pair(int m, double eta, double x0);
/// Q(eta) + double sum of the short-distance expansion, terms kept up to the
/// smallest inner term (never beyond ceil(theta)).
double short_expansion_shape(double eta, double x0);
/// The long-distance shape with the polygamma sums signed by `sign`.
double long_expansion_shape(double eta, double x0, double sign);
}  // namespace detail

/// V_T(z) = k0 alpha0 / (8 pi z^3) [(x0^2 - 2) K0 + 2 K1 - 2 x0 P]. Zero in vacuum.
double thermal_potential_exact(const AtomParams& atom, const ThermalEnvironment& env, double z);

/// lim z->0 of V_T at this theta:
/// (2 / 3 pi) alpha0 / lambda_T^4 sum_n (2n+3)! zeta(2n+4) / theta^{2n}.
double thermal_contact_constant(const AtomParams& atom, const ThermalEnvironment& env);

/// Dispersion-free contact constant 2 pi^3 / 45 alpha0 / lambda_T^4.
double thermal_contact_constant_ideal(const AtomParams& atom, const ThermalEnvironment& env);

/// Coefficient of -alpha0 z^2 / lambda_T^6 in the short-distance law: (2 pi)^5 / 315.
inline constexpr double kShortLawCoefficient =
    32.0 * 3.14159265358979323846 * 3.14159265358979323846 * 3.14159265358979323846 *
    3.14159265358979323846 * 3.14159265358979323846 / 315.0;

/// C(T) - (2 pi)^5 / 315 alpha0 z^2 / lambda_T^6 with the dispersion-free C(T).
double thermal_short_leading(const AtomParams& atom, const ThermalEnvironment& env, double z);

/// Short-distance expansion (1/2 pi)(alpha0 k0^2 / z^2) H_T. ValidityError if z >= 0.2 lambda_T.
double thermal_short_expansion(const AtomParams& atom, const ThermalEnvironment& env, double z);

enum class LongExpansionSign {
  corrected,   // polygamma sums enter with a minus sign; agrees with the exact series
  as_printed,  // both sums with a plus sign
};

/// (1/2 pi)(alpha0 k0 / z^3) L_T. ValidityError if z < 0.5 lambda_T.
double thermal_long_expansion(const AtomParams& atom, const ThermalEnvironment& env, double z,
                              LongExpansionSign sign = LongExpansionSign::corrected);

/// -k_B T alpha0 / (4 z^3) = -alpha0 / (4 lambda_T z^3). Total-potential asymptote.
double lifshitz_asymptote(const AtomParams& atom, const ThermalEnvironment& env, double z);

enum class ThermalApproximation { short_leading, exact_series, long_expansion };

std::string to_string(ThermalApproximation a);

/// Auto mode: short-leading for z <= 0.05 lambda_T, exact series below lambda_T,
/// long expansion from lambda_T on. Exact series in vacuum.
ThermalApproximation choose_thermal_approximation(const ThermalEnvironment& env, double z);

/// V_T from the requested approximation.
double thermal_potential(const AtomParams& atom, const ThermalEnvironment& env, double z,
                         ThermalApproximation how);

/// V0 + V_T with the exact series; notes carry the regime and auto choice.
PotentialBreakdown total_potential(const AtomParams& atom, const ThermalEnvironment& env, double z);

inline constexpr double kShortLeadingMaxU = 0.05;
inline constexpr double kShortExpansionMaxU = 0.2;
inline constexpr double kLongExpansionMinU = 0.5;
inline constexpr double kLongRegimeMinU = 1.0;

}  // namespace cpwall
