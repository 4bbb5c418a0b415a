#pragma once

// Double-precision special functions used by the closed forms of the
// atom-wall potential: cosine/sine integrals and their auxiliary pair,
// the half-space kernel G, the exponentially scaled E1 for complex
// arguments, even zeta values, polygamma of complex argument, and the two
// Bose-type lattice sums P and Q.
//
// Every function is pure; the only shared state is a read-only table of
// zeta(2m) built on first use.

#include <complex>

namespace cpwall::specfun {

using ComplexValue = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Tolerances for primitives and for composed physics quantities.
struct AccuracyBudget {
  double rel_tol_specfun = 1e-12;
  double rel_tol_composed = 1e-8;

  /// Throws DomainError unless 0 < rel_tol_specfun <= rel_tol_composed < 1e-3.
  void validate() const;
};

/// Branch switch points. Each was chosen from a sweep against 50-digit
/// references (tests/reference); the worst relative error measured on the
/// sweep grid is noted next to it.
namespace branch {
/// Ci/si power series below, auxiliary-function (scaled E1) route above.
/// Worst measured on [3, 5]: Ci/si 1.4e-15 absolute; F 4.6e-15 and G 1.7e-14
/// relative on the series side, F 3.4e-15 and G 1.1e-14 on the E1 side.
inline constexpr double kCiSiSeriesMax = 4.0;
/// Taylor series of G below, closed form above. Worst measured on
/// [0.2, 0.8]: 4.4e-16 (Taylor side), 5.6e-15 (closed side).
inline constexpr double kKernelTaylorMax = 0.5;
/// Scaled E1: power series inside this radius (any argument).
inline constexpr double kE1SeriesRadius = 1.0;
/// Scaled E1: power series also used near the cut, when |w| + Re w <= this.
inline constexpr double kE1CutBand = 3.0;
/// Scaled E1: divergent asymptotic series, optimally truncated, beyond this.
/// Worst measured next to the three switches: 1.2e-14 (continued fraction
/// just outside |w| = 1), 1.7e-15 at |w| = 40, 3.7e-15 along the cut band.
inline constexpr double kE1AsymptoticRadius = 40.0;
/// H0 asymptotic expansion beyond this x.
inline constexpr double kH0AsymptoticMin = 40.0;
/// P(eta): coth closed form up to here, zeta(2k) power series in 1/eta^2 above.
inline constexpr double kBoseSumSeriesMin = 2.0;
}  // namespace branch

/// Largest m accepted by zeta_even.
inline constexpr int kZetaEvenMax = 260;
/// Largest polygamma order accepted.
inline constexpr int kPolygammaMaxOrder = 1200;

/// Ci(x) = -int_x^inf cos t / t dt, for x > 0.
double cosine_integral(double x);

/// si(x) = -int_x^inf sin t / t dt = Si(x) - pi/2, for x >= 0.
double sine_integral_si(double x);

/// F(x) = Ci(x) sin x - si(x) cos x. F(0) = pi/2.
double auxiliary_f(double x);

/// G(x) = F'(x) = Ci(x) cos x + si(x) sin x, for x > 0.
double auxiliary_g(double x);

struct AuxiliaryPair {
  double f;
  double g;
};

/// F and G in one evaluation (shares the Ci/si or scaled-E1 work).
AuxiliaryPair auxiliary_fg(double x);

/// Half-space kernel sin x/x + 2 cos x/x^2 - 2 sin x/x^3, G(0) = 1/3.
/// G is even; negative x is evaluated as |x|.
double kernel_g(double x);

/// e^w E1(w) on the principal branch, computed without forming e^w.
/// Throws DomainError at w = 0 and on the cut (real w < 0).
ComplexValue scaled_e1(ComplexValue w);

/// zeta(2m) for 1 <= m <= kZetaEvenMax.
double zeta_even(int m);

/// A complex number stored as mantissa * exp(log_scale), used where the
/// plain value would overflow or underflow (large polygamma orders).
struct ScaledComplex {
  ComplexValue mantissa;
  double log_scale = 0.0;

  /// Value as a plain complex; may overflow to inf or underflow to 0.
  ComplexValue value() const;
};

/// Hurwitz zeta(s, a) = sum_{k>=0} (a + k)^-s for integer s >= 2.
ScaledComplex hurwitz_zeta_scaled(int s, ComplexValue a);
ComplexValue hurwitz_zeta(int s, ComplexValue a);

/// psi^(m)(z) in scaled form. m = 0 is the digamma function.
/// Throws PoleError at nonpositive integers.
ScaledComplex polygamma_scaled(int m, ComplexValue z);

/// psi^(m)(z). Throws OverflowError if the value is not representable.
ComplexValue polygamma(int m, ComplexValue z);

/// P(eta) = sum_{m>=1} 1/(1 + m^2 eta^2) = pi coth(pi/eta)/(2 eta) - 1/2.
double bose_sum_p(double eta);

/// Q(x) = sum_{m>=2} (-1)^m (1 - 1/m) zeta(2m) / x^{2m}, x > 1.
double q_series(double x);

namespace detail {

// Individual evaluation branches, exposed for branch-consistency tests.
double ci_series(double x);
double si_series(double x);
AuxiliaryPair auxiliary_fg_from_e1(double x);
double kernel_g_taylor(double x);
double kernel_g_closed(double x);
ComplexValue scaled_e1_series(ComplexValue w);
ComplexValue scaled_e1_continued_fraction(ComplexValue w);
ComplexValue scaled_e1_asymptotic(ComplexValue w);

/// zeta(2m) for any m >= 1 (no range check; tends to 1).
double zeta_even_unchecked(int m);

/// B_{2j} / (2j)! for 1 <= j <= 30.
double scaled_bernoulli(int j);

}  // namespace detail

}  // namespace cpwall::specfun
