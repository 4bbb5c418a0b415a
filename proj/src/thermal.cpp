#include "cpwall/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "cpwall/errors.hpp"
#include "cpwall/vacuum.hpp"

namespace cpwall {

namespace {

using specfun::kPi;

constexpr double kEps = 1e-17;
// Direct m-terms are summed until (M + 1) theta reaches this; beyond, the
// asymptotic expansion of each term is summed in closed form.
constexpr double kTailStart = 50.0;

void require_dimensionless(double eta, double x0, const char* what) {
  if (!(eta > 0.0) || !std::isfinite(eta) || !(x0 > 0.0) || !std::isfinite(x0)) {
    throw DomainError(std::string(what) + ": eta and x0 must be positive and finite");
  }
  if (eta * x0 < kMinTheta * (1.0 - 1e-12)) throw DomainError(std::string(what) + ": eta * x0 = theta must be >= 10");
}

// Checks the environment belongs to this atom; returns false for vacuum.
bool require_thermal(const AtomParams& atom, const ThermalEnvironment& env) {
  atom.validate();
  if (env.is_vacuum()) return false;
  if (!(env.lambda_T > 0.0) || !(env.theta >= kMinTheta)) {
    throw DomainError("thermal: theta = k0 lambda_T must be >= 10");
  }
  if (std::abs(atom.k0 * env.lambda_T - env.theta) > 1e-9 * env.theta) {
    throw DomainError("thermal: environment theta does not match k0 * lambda_T");
  }
  return true;
}

struct TailSums {
  ComplexValue plus;
  ComplexValue minus;
  int terms = 0;
  double bound = 0.0;
};

// Sum over m > M of the regularised terms, from e^w E1(w) ~ sum_k (-1)^k k! / w^{k+1}
// with w = theta (m - i c): k = 0 gives digamma differences, k >= 1 Hurwitz zetas.
TailSums asymptotic_tail(int M, double theta, double c) {
  const ComplexValue a(M + 1.0, -c);
  const ComplexValue dpsi = specfun::polygamma(0, ComplexValue(M + 1.0)) - specfun::polygamma(0, a);
  TailSums t;
  t.plus = dpsi / theta;
  t.minus = -dpsi / theta;
  double scale = 1.0 / theta;  // k! / theta^{k+1}
  double previous = INFINITY;
  for (int k = 1; k < 400; ++k) {
    scale *= k / theta;
    const ComplexValue z = specfun::hurwitz_zeta(k + 1, a);
    const double magnitude = scale * std::abs(z);
    if (magnitude >= previous) {
      t.bound = magnitude;
      return t;
    }
    t.plus += (k % 2 ? -scale : scale) * z;
    t.minus -= scale * z;
    ++t.terms;
    previous = magnitude;
    if (magnitude < kEps * (std::abs(t.plus) + std::abs(t.minus))) {
      t.bound = magnitude;
      return t;
    }
  }
  t.bound = previous;
  return t;
}

double log_inner_term(int j, double log_theta) {
  return std::lgamma(2.0 * j) + std::log(specfun::detail::zeta_even_unchecked(j)) - 2.0 * j * log_theta;
}

}  // namespace

namespace detail {

std::pair<ComplexValue, ComplexValue> j0_term_pair(int m, double eta, double x0) {
  const ComplexValue w(m * eta * x0, -x0);
  return {specfun::scaled_e1(w), specfun::scaled_e1(-w)};
}

double short_expansion_shape(double eta, double x0) {
  require_dimensionless(eta, x0, "short_expansion_shape");
  const double theta = eta * x0;
  const double log_theta = std::log(theta);
  const int n_cap = static_cast<int>(std::ceil(theta));

  // Inner terms (2j-1)! zeta(2j) / theta^{2j}, kept while they decrease.
  std::vector<double> log_t{0.0};  // index 0 unused
  for (int j = 1; j <= n_cap; ++j) {
    const double lt = log_inner_term(j, log_theta);
    if (j > 1 && lt > log_t.back()) break;
    log_t.push_back(lt);
  }
  const int last = static_cast<int>(log_t.size()) - 1;

  // log of the suffix sums sum_{j=m}^{last} t_j.
  std::vector<double> log_suffix(last + 2, -INFINITY);
  for (int m = last; m >= 1; --m) {
    const double rest = log_suffix[m + 1];
    log_suffix[m] = log_t[m] + std::log1p(std::exp(rest - log_t[m]));
  }

  const double log_x0 = std::log(x0);
  double sum = 0.0;
  for (int m = 2; m <= last; ++m) {
    const double weight = 2.0 / x0 - x0 * (1.0 - 1.0 / m);
    const double magnitude = std::exp((2.0 * m - 1.0) * log_x0 - std::lgamma(2.0 * m) + log_suffix[m]);
    const double term = (m % 2 ? -1.0 : 1.0) * weight * magnitude;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return specfun::q_series(eta) + sum;
}

double long_expansion_shape(double eta, double x0, double sign) {
  require_dimensionless(eta, x0, "long_expansion_shape");
  const double theta = eta * x0;
  const double log_theta = std::log(theta);
  const int n_cap = static_cast<int>(std::ceil(theta));
  const ComplexValue arg(0.0, -1.0 / eta);

  // sum_j part(psi^(order(j))(arg)) / theta^{power(j)}, cut at the smallest |term|.
  auto truncated = [&](auto order, auto power, bool imaginary) {
    double sum = 0.0;
    double previous = INFINITY;
    for (int j = 1; j <= n_cap; ++j) {
      const specfun::ScaledComplex v = specfun::polygamma_scaled(order(j), arg);
      const double modulus = std::abs(v.mantissa);
      const double log_magnitude = v.log_scale + std::log(modulus) - power(j) * log_theta;
      if (log_magnitude > previous) break;
      previous = log_magnitude;
      const double unit = (imaginary ? v.mantissa.imag() : v.mantissa.real()) / modulus;
      const double term = unit * std::exp(log_magnitude);
      sum += term;
      if (std::exp(log_magnitude) < kEps * std::abs(sum)) break;
    }
    return sum;
  };
  const double im_sum = truncated([](int j) { return 2 * j; }, [](int j) { return 2.0 * j + 1.0; }, true);
  const double re_sum = truncated([](int j) { return 2 * j - 1; }, [](int j) { return 2.0 * j; }, false);
  return -specfun::bose_sum_p(eta) / x0 + sign * ((1.0 - x0 * x0 / 2.0) * im_sum + x0 * re_sum);
}

}  // namespace detail

ThermalSeriesTerms j0_series(double eta, double x0, double rel_tol, int term_cap) {
  require_dimensionless(eta, x0, "j0_series");
  const double theta = eta * x0;
  const double c = x0 / theta;
  const double p = specfun::bose_sum_p(eta);
  // i pi e^{i x0} / (e^theta - 1)
  const ComplexValue pole = ComplexValue(0.0, kPi) * std::polar(1.0, x0) / std::expm1(theta);

  int M = std::max(1, static_cast<int>(std::ceil(kTailStart / theta)) - 1);
  for (;;) {
    ComplexValue plus = 0.0;
    ComplexValue minus = 0.0;
    for (int m = 1; m <= M; ++m) {
      const auto [tp, tm] = detail::j0_term_pair(m, eta, x0);
      const double reg = 1.0 / (m * theta);
      plus += tp - reg;
      minus += tm + reg;
    }
    const TailSums tail = asymptotic_tail(M, theta, c);

    ThermalSeriesTerms out;
    out.j0_plus = plus + tail.plus;
    out.j0_minus = pole + minus + tail.minus;
    out.k0_val = (out.j0_plus - out.j0_minus).imag();
    out.k1_val = -x0 * (out.j0_plus + out.j0_minus).real();
    out.p_val = p;
    out.terms_used = M + tail.terms;
    out.tail_bound = tail.bound;

    const double bracket = (x0 * x0 - 2.0) * out.k0_val + 2.0 * out.k1_val - 2.0 * x0 * p;
    const double propagated = 2.0 * (std::abs(x0 * x0 - 2.0) + 2.0 * x0) * tail.bound;
    if (propagated <= rel_tol * std::abs(bracket)) return out;
    if (2 * M > term_cap) {
      throw ConvergenceError("j0_series: tail bound not met within " + std::to_string(term_cap) + " terms");
    }
    M *= 2;
  }
}

double thermal_bracket(double eta, double x0) {
  const ThermalSeriesTerms t = j0_series(eta, x0);
  return (x0 * x0 - 2.0) * t.k0_val + 2.0 * t.k1_val - 2.0 * x0 * t.p_val;
}

double thermal_potential_exact(const AtomParams& atom, const ThermalEnvironment& env, double z) {
  require_distance(z, "thermal_potential_exact");
  if (!require_thermal(atom, env)) return 0.0;
  const double x0 = 2.0 * atom.k0 * z;
  const double eta = env.lambda_T / (2.0 * z);
  return energy_prefactor(atom, z) * thermal_bracket(eta, x0);
}

double thermal_contact_constant(const AtomParams& atom, const ThermalEnvironment& env) {
  if (!require_thermal(atom, env)) return 0.0;
  const double log_theta = std::log(env.theta);
  double sum = 0.0;
  double previous = INFINITY;
  for (int n = 0; n < 10000; ++n) {
    const double log_term = std::lgamma(2.0 * n + 4.0) +
                            std::log(specfun::detail::zeta_even_unchecked(n + 2)) - 2.0 * n * log_theta;
    if (log_term > previous) break;
    previous = log_term;
    const double term = std::exp(log_term);
    sum += term;
    if (term < kEps * sum) break;
  }
  const double l2 = env.lambda_T * env.lambda_T;
  return 2.0 / (3.0 * kPi) * sum * atom.alpha0 / (l2 * l2);
}

double thermal_contact_constant_ideal(const AtomParams& atom, const ThermalEnvironment& env) {
  if (!require_thermal(atom, env)) return 0.0;
  const double l2 = env.lambda_T * env.lambda_T;
  return 2.0 * kPi * kPi * kPi / 45.0 * atom.alpha0 / (l2 * l2);
}

double thermal_short_leading(const AtomParams& atom, const ThermalEnvironment& env, double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) throw DomainError("thermal_short_leading: z must be >= 0");
  if (!require_thermal(atom, env)) return 0.0;
  const double l2 = env.lambda_T * env.lambda_T;
  return thermal_contact_constant_ideal(atom, env) - kShortLawCoefficient * atom.alpha0 * z * z / (l2 * l2 * l2);
}

double thermal_short_expansion(const AtomParams& atom, const ThermalEnvironment& env, double z) {
  require_distance(z, "thermal_short_expansion");
  if (!require_thermal(atom, env)) return 0.0;
  if (z >= kShortExpansionMaxU * env.lambda_T) {
    throw ValidityError("thermal_short_expansion: requires z < 0.2 lambda_T");
  }
  const double x0 = 2.0 * atom.k0 * z;
  const double eta = env.lambda_T / (2.0 * z);
  return atom.alpha0 * atom.k0 * atom.k0 / (2.0 * kPi * z * z) * detail::short_expansion_shape(eta, x0);
}

double thermal_long_expansion(const AtomParams& atom, const ThermalEnvironment& env, double z,
                              LongExpansionSign sign) {
  require_distance(z, "thermal_long_expansion");
  if (!require_thermal(atom, env)) return 0.0;
  if (z < kLongExpansionMinU * env.lambda_T) {
    throw ValidityError("thermal_long_expansion: requires z >= 0.5 lambda_T");
  }
  const double x0 = 2.0 * atom.k0 * z;
  const double eta = env.lambda_T / (2.0 * z);
  const double s = sign == LongExpansionSign::corrected ? -1.0 : 1.0;
  return atom.alpha0 * atom.k0 / (2.0 * kPi * z * z * z) * detail::long_expansion_shape(eta, x0, s);
}

double lifshitz_asymptote(const AtomParams& atom, const ThermalEnvironment& env, double z) {
  require_distance(z, "lifshitz_asymptote");
  if (!require_thermal(atom, env)) return 0.0;
  return -atom.alpha0 / (4.0 * env.lambda_T * z * z * z);
}

std::string to_string(ThermalApproximation a) {
  switch (a) {
    case ThermalApproximation::short_leading: return "short_leading";
    case ThermalApproximation::exact_series: return "exact_series";
    case ThermalApproximation::long_expansion: return "long_expansion";
  }
  return "unknown";
}

ThermalApproximation choose_thermal_approximation(const ThermalEnvironment& env, double z) {
  require_distance(z, "choose_thermal_approximation");
  if (env.is_vacuum()) return ThermalApproximation::exact_series;
  const double u = z / env.lambda_T;
  if (u <= kShortLeadingMaxU) return ThermalApproximation::short_leading;
  if (u < kLongRegimeMinU) return ThermalApproximation::exact_series;
  return ThermalApproximation::long_expansion;
}

double thermal_potential(const AtomParams& atom, const ThermalEnvironment& env, double z,
                         ThermalApproximation how) {
  switch (how) {
    case ThermalApproximation::short_leading: return thermal_short_leading(atom, env, z);
    case ThermalApproximation::exact_series: return thermal_potential_exact(atom, env, z);
    case ThermalApproximation::long_expansion: return thermal_long_expansion(atom, env, z);
  }
  throw DomainError("thermal_potential: unknown approximation");
}

PotentialBreakdown total_potential(const AtomParams& atom, const ThermalEnvironment& env, double z) {
  PotentialBreakdown b;
  b.vacuum = vacuum_potential(atom, z);
  b.thermal = thermal_potential_exact(atom, env, z);
  b.total = b.vacuum + b.thermal;
  std::ostringstream notes;
  notes << "vacuum_regime=" << to_string(classify_regime(2.0 * atom.k0 * z))
        << "; auto_thermal=" << to_string(choose_thermal_approximation(env, z));
  b.notes = notes.str();
  return b;
}

}  // namespace cpwall
