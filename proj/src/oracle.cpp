#include "cpwall/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "cpwall/errors.hpp"
#include "cpwall/vacuum.hpp"

namespace cpwall::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRoundoff = 4.0 * std::numeric_limits<double>::epsilon();
// Abel damping is integrated out to eps x = kDampingCut (e^-42 ~ 6e-19).
constexpr double kDampingCut = 42.0;

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Sum {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

template <class F>
void add_panel(Sum& s, F f, double a, double b) {
  double error = 0.0;
  double l1 = 0.0;
  const double v = Kronrod::integrate(f, a, b, 10, 1e-14, &error, &l1);
  s.value += v;
  s.error += error + kRoundoff * l1;
  ++s.panels;
}

// x^3 G(x) = x^2 sin x + 2x cos x - 2 sin x, with its own Taylor series near 0.
double x3_kernel(double x) {
  if (x < 0.5) {
    const double x2 = x * x;
    double term = 1.0 / 3.0;
    double sum = term;
    for (int k = 1; k < 12; ++k) {
      // ratio of consecutive coefficients 2(2k+1)(k+1)/(2k+3)!
      term *= -x2 * (2.0 * k + 1.0) * (k + 1.0) / ((2.0 * k - 1.0) * k * (2.0 * k + 2.0) * (2.0 * k + 3.0));
      sum += term;
    }
    return x2 * x * sum;
  }
  const double s = std::sin(x);
  return x * x * s + 2.0 * x * std::cos(x) - 2.0 * s;
}

// Panels [0, end] cut at multiples of `step`; the interval (pole - width,
// pole + width) is left out when width > 0 and handled by the caller.
std::vector<double> breakpoints(double end, double step, double pole, double width) {
  std::vector<double> pts;
  const int n = static_cast<int>(std::ceil(end / step));
  for (int i = 0; i <= n; ++i) {
    const double p = std::min(i * step, end);
    if (width > 0.0 && p > pole - width && p < pole + width) continue;
    if (pts.empty() || p > pts.back()) pts.push_back(p);
  }
  if (width > 0.0) {
    pts.push_back(pole - width);
    pts.push_back(pole + width);
    std::sort(pts.begin(), pts.end());
  }
  return pts;
}

// Integrates num(x)/(x - pole) (sign = +1) or num(x)/(pole - x) (sign = -1)
// over [0, end] as a principal value, plus any regular part handled by `regular`.
template <class Num>
void principal_value(Sum& s, Num num, double sign, double pole, double width, double end, double step) {
  const std::vector<double> pts = breakpoints(end, step, pole, width);
  auto f = [&](double x) { return sign * num(x) / (x - pole); };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pole - width && pts[i + 1] == pole + width) {
      // Symmetric subtraction: int_0^w [num(p + t) - num(p - t)] / t dt.
      add_panel(s, [&](double t) { return sign * (num(pole + t) - num(pole - t)) / t; }, 0.0, width);
    } else {
      add_panel(s, f, pts[i], pts[i + 1]);
    }
  }
}

template <class F>
void regular(Sum& s, F f, double end, double step) {
  const std::vector<double> pts = breakpoints(end, step, 0.0, 0.0);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) add_panel(s, f, pts[i], pts[i + 1]);
}

struct Growth {
  double c1;
  double c2;
};

// Abel transform of the subtracted growing pieces c1 x sin x + c2 sin x + 2 c1 cos x.
double growth_transform(Growth g, double eps) {
  const double d = 1.0 + eps * eps;
  return g.c1 * 2.0 * eps / (d * d) + g.c2 / d + 2.0 * g.c1 * eps / d;
}

}  // namespace

QuadratureReport f_integral_oracle(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("f_integral_oracle: x must be positive and finite");
  Sum s;
  // the e^{-x t} spike at t = 0 has width 1/x; resolve it on its own panel
  const auto head = [x](double t) { return std::exp(-x * t) / (1.0 + t * t); };
  const double knee = std::min(1.0, 40.0 / x);
  add_panel(s, head, 0.0, knee);
  if (knee < 1.0) add_panel(s, head, knee, 1.0);

  // t = 1 - ln(u)/x maps [1, inf) onto (0, 1].
  boost::math::quadrature::tanh_sinh<double> ts;
  double error = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  const double scale = std::exp(-x) / x;
  const double tail = ts.integrate(
      [x](double u) {
        const double t = 1.0 - std::log(u) / x;
        return 1.0 / (1.0 + t * t);
      },
      0.0, 1.0, 1e-15, &error, &l1, &levels);
  s.value += scale * tail;
  s.error += scale * (error + kRoundoff * l1);
  s.panels += static_cast<int>(levels);

  QuadratureReport r;
  r.value = s.value;
  r.abs_error_estimate = s.error;
  r.subdivisions = s.panels;
  return r;
}

QuadratureReport vacuum_split_quadrature(const AtomParams& atom, double z, VacuumPart part,
                                         const VacuumQuadratureOptions& options) {
  atom.validate();
  require_distance(z, "vacuum_split_quadrature");
  if (options.levels < 2 || !(options.eps0 > 0.0) || options.eps0 > 1.0) {
    throw DomainError("vacuum_split_quadrature: need levels >= 2 and 0 < eps0 <= 1");
  }
  const double x0 = 2.0 * atom.k0 * z;
  const double width = options.pole_half_width > 0.0 ? options.pole_half_width : std::min(0.5 * x0, 1.0);
  if (width >= x0) throw DomainError("vacuum_split_quadrature: pole half-width must be below x0");

  // x^3 G(x) w(x) = growing pieces + remainder; the remainder is written as
  // num(x)/(x - x0) for the two pole parts.
  Growth growth{};
  switch (part) {
    case VacuumPart::total: growth = {x0, -x0 * x0}; break;
    case VacuumPart::fr: growth = {0.0, -x0 * x0}; break;
    case VacuumPart::rr: growth = {x0, 0.0}; break;
  }

  std::vector<double> eps_list;
  std::vector<double> values;
  double quadrature_error = 0.0;
  int panels = 0;
  for (int level = 0; level < options.levels; ++level) {
    const double eps = options.eps0 / std::ldexp(1.0, level);
    const double end = kDampingCut / eps;
    Sum s;
    if (part == VacuumPart::total) {
      regular(
          s,
          [=](double x) {
            const double sn = std::sin(x);
            return std::exp(-eps * x) * (x0 * x0 * x0 * sn - 2.0 * x0 * x0 * std::cos(x) - 2.0 * x0 * sn) / (x + x0);
          },
          end, kPi);
    } else if (part == VacuumPart::fr) {
      auto num = [=](double x) {
        const double sn = std::sin(x);
        return -std::exp(-eps * x) * (x0 * x0 * x0 * x0 * sn + 2.0 * x * x0 * x0 * std::cos(x) - 2.0 * x0 * x0 * sn) /
               (x + x0);
      };
      principal_value(s, num, 1.0, x0, width, end, kPi);
    } else {
      auto num = [=](double x) {
        const double sn = std::sin(x);
        return std::exp(-eps * x) * (x0 * x0 * x0 * x * sn + 2.0 * x0 * x0 * x0 * std::cos(x) - 2.0 * x0 * x * sn) /
               (x + x0);
      };
      principal_value(s, num, 1.0, x0, width, end, kPi);
    }
    eps_list.push_back(eps);
    values.push_back(growth_transform(growth, eps) + s.value);
    quadrature_error = std::max(quadrature_error, s.error);
    panels += s.panels;
  }

  // Neville extrapolation to eps = 0.
  const int n = static_cast<int>(values.size());
  std::vector<double> p = values;
  double previous_diagonal = p[n - 1];
  double last_diagonal = p[n - 1];
  for (int j = 1; j < n; ++j) {
    for (int i = n - 1; i >= j; --i) {
      p[i] = (eps_list[i - j] * p[i] - eps_list[i] * p[i - 1]) / (eps_list[i - j] - eps_list[i]);
    }
    previous_diagonal = last_diagonal;
    last_diagonal = p[n - 1];
  }
  if (!std::isfinite(last_diagonal)) throw ConvergenceError("vacuum_split_quadrature: extrapolation failed");

  const double z2 = z * z;
  const double scale = atom.alpha0 / (16.0 * kPi * z2 * z2);
  QuadratureReport r;
  r.value = scale * last_diagonal;
  r.abs_error_estimate = scale * (std::abs(last_diagonal - previous_diagonal) + quadrature_error);
  r.subdivisions = panels;
  r.regulator_epsilon = eps_list.back() / (2.0 * z);
  r.extrapolation_steps = n - 1;
  return r;
}

VacuumShift vacuum_shift(const AtomParams& atom, double z, bool with_parts) {
  VacuumShift v;
  v.total = vacuum_potential(atom, z);
  if (with_parts) {
    v.rr_part = vacuum_split_quadrature(atom, z, VacuumPart::rr).value;
    v.fr_part = vacuum_split_quadrature(atom, z, VacuumPart::fr).value;
    v.parts_from_quadrature = true;
  }
  return v;
}

QuadratureReport thermal_quadrature(const AtomParams& atom, const ThermalEnvironment& env, double z,
                                    const ThermalQuadratureOptions& options) {
  atom.validate();
  require_distance(z, "thermal_quadrature");
  QuadratureReport r;
  if (env.is_vacuum()) return r;
  if (!(env.theta >= kMinTheta)) throw DomainError("thermal_quadrature: theta must be >= 10");

  const double x0 = 2.0 * atom.k0 * z;
  const double eta = env.lambda_T / (2.0 * z);
  const double theta = eta * x0;
  const double end = std::max(options.cutoff, theta + 40.0) / eta;
  const double step = std::min(kPi, 2.0 / eta);
  Sum s;
  if (options.dispersion) {
    const double width = options.pole_half_width > 0.0 ? options.pole_half_width : std::min(0.25 * x0, 1.0);
    if (width >= x0) throw DomainError("thermal_quadrature: pole half-width must be below x0");
    // 2 x0 x^3 G / ((x0 - x)(x0 + x)(e^{eta x} - 1))
    auto num = [=](double x) { return 2.0 * x0 * x3_kernel(x) / ((x0 + x) * std::expm1(eta * x)); };
    principal_value(s, num, -1.0, x0, width, end, step);
  } else {
    regular(s, [=](double x) { return 2.0 / x0 * x3_kernel(x) / std::expm1(eta * x); }, end, step);
  }
  const double scale = energy_prefactor(atom, z);
  r.value = scale * s.value;
  r.abs_error_estimate = std::abs(scale) * s.error;
  r.subdivisions = s.panels;
  return r;
}

double bose_integral(int n) {
  if (n < 1) throw DomainError("bose_integral: n must be >= 1");
  return std::tgamma(n + 1.0) * std::riemann_zeta(n + 1.0);
}

QuadratureReport bose_integral_quadrature(int n) {
  if (n < 1) throw DomainError("bose_integral_quadrature: n must be >= 1");
  boost::math::quadrature::exp_sinh<double> es;
  double error = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  const double v = es.integrate([n](double x) { return std::exp(n * std::log(x) - x) / -std::expm1(-x); }, 1e-15, &error, &l1, &levels);
  QuadratureReport r;
  r.value = v;
  r.abs_error_estimate = error + kRoundoff * l1;
  r.subdivisions = static_cast<int>(levels);
  return r;
}

}  // namespace cpwall::oracle
