#include "cpwall/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>

#include "cpwall/errors.hpp"
#include "cpwall/thermal.hpp"
#include "cpwall/vacuum.hpp"

namespace cpwall::analysis {

namespace {

struct RootResult {
  double root;
  int iterations;
};

RootResult toms748(const std::function<double(double)>& f, double lo, double hi, double tol, const char* what) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw NoBracketError(std::string(what) + ": no sign change on [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, [tol](double x, double y) { return std::abs(y - x) < tol; }, max_iter);
  return {0.5 * (a + b), static_cast<int>(max_iter)};
}

double scaled_thermal(const AtomParams& atom, const ThermalEnvironment& env, double u) {
  const double l2 = env.lambda_T * env.lambda_T;
  return thermal_potential_exact(atom, env, u * env.lambda_T) * l2 * l2 / atom.alpha0;
}

std::optional<double> relative(double approx, double exact) {
  if (exact == 0.0) return std::nullopt;
  return approx / exact - 1.0;
}

}  // namespace

double five_point_derivative(const std::function<double(double)>& f, double u, double h) {
  return (f(u - 2.0 * h) - 8.0 * f(u - h) + 8.0 * f(u + h) - f(u + 2.0 * h)) / (12.0 * h);
}

EquilibriumResult find_equilibrium(const std::function<double(double)>& v_of_u, double lo, double hi) {
  if (!(lo > 2.0 * kDerivativeStep) || !(hi > lo)) throw DomainError("find_equilibrium: need 0 < lo < hi");
  const auto slope = [&](double u) { return five_point_derivative(v_of_u, u); };
  const RootResult r = toms748(slope, lo, hi, kRootTolerance, "find_equilibrium");
  const double h = 1e-3;
  EquilibriumResult out;
  out.z_star_over_lambdaT = r.root;
  out.curvature = (v_of_u(r.root + h) - 2.0 * v_of_u(r.root) + v_of_u(r.root - h)) / (h * h);
  out.curvature_positive = out.curvature > 0.0;
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  out.iterations = r.iterations;
  return out;
}

EquilibriumResult find_thermal_equilibrium(const AtomParams& atom, const ThermalEnvironment& env, double lo,
                                           double hi) {
  if (env.is_vacuum()) throw DomainError("find_thermal_equilibrium: needs a thermal environment");
  return find_equilibrium([&](double u) { return scaled_thermal(atom, env, u); }, lo, hi);
}

double dominance_crossover(const AtomParams& atom, const ThermalEnvironment& env) {
  if (env.is_vacuum()) throw DomainError("dominance_crossover: needs a thermal environment");
  const double lambda = env.lambda_T;
  const auto log_ratio = [&](double u) {
    const double z = u * lambda;
    return std::log(std::abs(thermal_potential_exact(atom, env, z))) - std::log(std::abs(vacuum_potential(atom, z)));
  };
  // First upward sign change on a geometric scan, then TOMS 748 inside it.
  const int n = 80;
  const double lo = 0.5;
  const double hi = 50.0;
  double u_prev = lo;
  double f_prev = log_ratio(lo);
  for (int i = 1; i <= n; ++i) {
    const double u = lo * std::pow(hi / lo, static_cast<double>(i) / n);
    const double f = log_ratio(u);
    if (std::isfinite(f_prev) && std::isfinite(f) && f_prev < 0.0 && f >= 0.0) {
      return lambda * toms748(log_ratio, u_prev, u, kRootTolerance, "dominance_crossover").root;
    }
    u_prev = u;
    f_prev = f;
  }
  throw NoBracketError("dominance_crossover: |V_T| never overtakes |V0| on 0.5 <= z/lambda_T <= 50");
}

QuadraticFit fit_quadratic(const std::vector<double>& u, const std::vector<double>& v) {
  const auto n = static_cast<Eigen::Index>(u.size());
  if (n < 3 || v.size() != u.size()) throw IllConditionedError("fit_quadratic: need >= 3 paired samples");
  const auto [umin, umax] = std::minmax_element(u.begin(), u.end());
  const double mid = 0.5 * (*umin + *umax);
  const double half = 0.5 * (*umax - *umin);
  const auto [vmin, vmax] = std::minmax_element(v.begin(), v.end());
  const double range = *vmax - *vmin;
  if (!(half > 0.0) || !(range > 0.0)) throw IllConditionedError("fit_quadratic: degenerate window");

  // Centred and scaled abscissa t = (u - mid) / half keeps the design well conditioned.
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = (u[i] - mid) / half;
    design(i, 0) = 1.0;
    design(i, 1) = t;
    design(i, 2) = t * t;
    rhs(i) = v[i];
  }
  const auto qr = design.colPivHouseholderQr();
  if (qr.rank() < 3) throw IllConditionedError("fit_quadratic: rank-deficient design");
  const Eigen::Vector3d p = qr.solve(rhs);
  const double rms = std::sqrt((design * p - rhs).squaredNorm() / static_cast<double>(n));

  QuadraticFit fit;
  fit.u_lo = *umin;
  fit.u_hi = *umax;
  fit.c = p(2) / (half * half);
  fit.b = p(1) / half - 2.0 * p(2) * mid / (half * half);
  fit.a = p(0) - p(1) * mid / half + p(2) * mid * mid / (half * half);
  fit.rms_residual_relative = rms / range;
  fit.points = static_cast<int>(n);
  return fit;
}

QuadraticFit quadratic_fit(const AtomParams& atom, const ThermalEnvironment& env, double u_lo, double u_hi,
                           int points) {
  if (env.is_vacuum()) throw DomainError("quadratic_fit: needs a thermal environment");
  if (!(u_lo > 0.0) || !(u_hi > u_lo) || !(u_hi < 1.5)) {
    throw DomainError("quadratic_fit: window must satisfy 0 < lo < hi < 1.5");
  }
  if (points < kMinFitPoints) throw DomainError("quadratic_fit: need at least 20 sample points");
  std::vector<double> u(points);
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i) {
    u[i] = u_lo + (u_hi - u_lo) * i / (points - 1);
    v[i] = scaled_thermal(atom, env, u[i]);
  }
  return fit_quadratic(u, v);
}

std::vector<RegimeErrorRow> regime_error_table(const AtomParams& atom, const ThermalEnvironment& env,
                                               const std::vector<double>& z_grid) {
  if (!std::is_sorted(z_grid.begin(), z_grid.end())) throw DomainError("regime_error_table: grid must be ascending");
  std::vector<RegimeErrorRow> rows;
  rows.reserve(z_grid.size());
  for (const double z : z_grid) {
    RegimeErrorRow row;
    row.z = z;
    row.x0 = 2.0 * atom.k0 * z;
    row.vacuum = vacuum_potential(atom, z);
    row.thermal = thermal_potential_exact(atom, env, z);
    row.total = row.vacuum + row.thermal;
    row.nonretarded = relative(nonretarded_asymptote(atom, z), row.vacuum);
    row.retarded = relative(retarded_asymptote(atom, z), row.vacuum);
    if (!env.is_vacuum()) {
      row.u = z / env.lambda_T;
      row.short_leading = relative(thermal_short_leading(atom, env, z), row.thermal);
      if (row.u >= kLongExpansionMinU) row.long_expansion = relative(thermal_long_expansion(atom, env, z), row.thermal);
      row.lifshitz = relative(lifshitz_asymptote(atom, env, z), row.total);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cpwall::analysis
