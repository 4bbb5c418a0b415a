#include "cpwall/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <utility>

#include "cpwall/analysis.hpp"
#include "cpwall/oracle.hpp"
#include "cpwall/specfun.hpp"
#include "cpwall/thermal.hpp"
#include "cpwall/units.hpp"
#include "cpwall/vacuum.hpp"

namespace cpwall::verify {

namespace {

using specfun::kPi;

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, n == 1 ? 0.0 : static_cast<double>(i) / (n - 1));
  return v;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * (n == 1 ? 0.0 : static_cast<double>(i) / (n - 1));
  return v;
}

std::string sci(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
  return buf;
}

std::string fix(double x, int decimals = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

struct Worst {
  double value = 0.0;
  double at = 0.0;
  void update(double v, double where) {
    if (!(v <= value)) {
      value = v;
      at = where;
    }
  }
};

const AtomParams kAtom{1.0, 1.0};

CriterionResult start(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

double lambda4(const ThermalEnvironment& env) {
  const double l2 = env.lambda_T * env.lambda_T;
  return l2 * l2;
}

CriterionResult vacuum_oracle(bool quick) {
  CriterionResult r = start(1, "Closed-form/oracle equivalence (vacuum)");
  Worst w;
  for (double x0 : logspace(0.05, 100.0, quick ? 10 : 50)) {
    const double z = x0 / 2.0;
    const double exact = vacuum_potential(kAtom, z);
    const double q = oracle::vacuum_split_quadrature(kAtom, z, oracle::VacuumPart::total).value;
    w.update(std::abs(q / exact - 1.0), x0);
  }
  r.passed = w.value < 1e-8;
  r.measured = "max rel err " + sci(w.value) + " at x0 = " + fix(w.at, 3) + " (limit 1e-8)";
  return r;
}

CriterionResult thermal_oracle(bool quick) {
  CriterionResult r = start(2, "Closed-form/oracle equivalence (thermal)");
  Worst w;
  double worst_theta = 0.0;
  for (double theta : {30.0, 100.0, 300.0}) {
    const auto env = ThermalEnvironment::from_theta(kAtom, theta);
    for (double u : logspace(0.01, 2.0, quick ? 8 : 40)) {
      const double z = u * env.lambda_T;
      const double exact = thermal_potential_exact(kAtom, env, z);
      const double q = oracle::thermal_quadrature(kAtom, env, z).value;
      const double before = w.value;
      w.update(std::abs(q / exact - 1.0), u);
      if (w.value != before) worst_theta = theta;
    }
  }
  r.passed = w.value < 1e-6;
  r.measured = "max rel err " + sci(w.value) + " at theta = " + fix(worst_theta, 0) + ", z/lambda_T = " +
               fix(w.at, 4) + " (limit 1e-6)";
  return r;
}

CriterionResult nonretarded_limit(bool quick) {
  CriterionResult r = start(3, "Non-retarded limit");
  auto error = [](double x0) {
    const double z = x0 / 2.0;
    return std::abs(nonretarded_asymptote(kAtom, z) / vacuum_potential(kAtom, z) - 1.0);
  };
  Worst w;
  for (double x0 : logspace(1e-4, kNonRetardedMaxX0 * (1.0 - 1e-12), quick ? 20 : 80)) w.update(error(x0), x0);
  // Largest x0 where the 2% bound still holds (error grows monotonically here).
  double lo = 1e-4;
  double hi = kNonRetardedMaxX0;
  for (int i = 0; i < 60; ++i) {
    const double mid = std::sqrt(lo * hi);
    (error(mid) < 0.02 ? lo : hi) = mid;
  }
  r.passed = w.value < 0.02;
  r.measured = "max rel err " + sci(w.value) + " at x0 = " + fix(w.at, 4) + " (limit 2e-2); bound holds only for x0 < " +
               fix(lo, 4);
  return r;
}

CriterionResult retarded_limit(bool quick) {
  CriterionResult r = start(4, "Retarded limit");
  auto error = [](double x0) {
    const double z = x0 / 2.0;
    return std::abs(retarded_asymptote(kAtom, z) / vacuum_potential(kAtom, z) - 1.0);
  };
  Worst w;
  for (double x0 : logspace(kRetardedMinX0 * (1.0 + 1e-12), 1e4, quick ? 20 : 80)) w.update(error(x0), x0);
  double lo = kRetardedMinX0;
  double hi = 1e3;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (error(mid) <= 0.01 ? hi : lo) = mid;
  }
  r.passed = w.value <= 0.01;
  r.measured = "max rel err " + sci(w.value) + " at z = " + fix(w.at / (4.0 * kPi), 3) +
               " lambda0 (limit 1e-2); bound holds only for z > " + fix(hi / (4.0 * kPi), 3) + " lambda0";
  return r;
}

CriterionResult lifshitz_limit(bool quick) {
  CriterionResult r = start(5, "Lifshitz limit");
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  Worst w;
  for (double u : logspace(1.0, 10.0, quick ? 10 : 40)) {
    const double z = u * env.lambda_T;
    const double total = total_potential(kAtom, env, z).total;
    w.update(std::abs(lifshitz_asymptote(kAtom, env, z) / total - 1.0), u);
  }
  r.passed = w.value < 0.01;
  r.measured = "max rel err " + sci(w.value) + " at z/lambda_T = " + fix(w.at, 3) + " (limit 1e-2)";
  return r;
}

CriterionResult thermal_constant(bool) {
  CriterionResult r = start(6, "Thermal constant C(T)");
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  const double l4 = lambda4(env);
  const double series = thermal_potential_exact(kAtom, env, 1e-3 * env.lambda_T) * l4;
  const double quad3 = oracle::thermal_quadrature(kAtom, env, 1e-3 * env.lambda_T).value * l4;
  const double quad4 = oracle::thermal_quadrature(kAtom, env, 1e-4 * env.lambda_T).value * l4;
  const double ideal = 2.0 * kPi * kPi * kPi / 45.0;
  char rounded[16];
  std::snprintf(rounded, sizeof rounded, "%.2f", series);
  const double mutual = std::max(std::abs(quad3 / series - 1.0), std::abs(quad4 / series - 1.0));
  r.passed = std::string(rounded) == "1.38" && mutual < 1e-3;
  r.measured = "V_T(1e-3 lambda_T) = " + fix(series, 6) + " (2 s.f. " + rounded + "); quadrature " + fix(quad3, 6) +
               " and " + fix(quad4, 6) + " at 1e-4; mutual " + sci(mutual) + " (limit 1e-3); 2 pi^3/45 = " +
               fix(ideal, 6) + ", offset " + sci(series / ideal - 1.0);
  return r;
}

CriterionResult short_law(bool quick) {
  CriterionResult r = start(7, "Short-distance z^2 law");
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  const double l4 = lambda4(env);
  const double contact = thermal_contact_constant(kAtom, env) * l4;
  const double ideal = thermal_contact_constant_ideal(kAtom, env) * l4;
  Worst w;
  Worst literal;
  for (double u : logspace(1e-3, kShortLeadingMaxU, quick ? 10 : 30)) {
    const double v = thermal_potential_exact(kAtom, env, u * env.lambda_T) * l4;
    const double law = -kShortLawCoefficient * u * u;
    w.update(std::abs((v - contact) / law - 1.0), u);
    literal.update(std::abs((v - ideal) / law - 1.0), u);
  }
  // Coefficient from the x^2 Taylor term of G, 2*3*2/5! = 1/10, and the Bose integral 5! zeta(6).
  const double taylor = 2.0 * 3.0 * 2.0 / 120.0;
  const double derived = 2.0 / kPi * taylor * 4.0 * oracle::bose_integral(5);
  const double coefficient_err = std::abs(derived / kShortLawCoefficient - 1.0);
  r.passed = w.value < 0.05 && coefficient_err < 1e-14;
  r.measured = "C(T) = exact z->0 limit " + fix(contact, 6) + "; max rel err " + sci(w.value) + " at z/lambda_T = " +
               fix(w.at, 4) + " (limit 5e-2); coefficient " + fix(derived, 10) + " vs 32 pi^5/315 rel " +
               sci(coefficient_err) + "; with literal 2 pi^3/45 the max rel err would be " + sci(literal.value);
  return r;
}

CriterionResult equilibrium(bool) {
  CriterionResult r = start(8, "Equilibrium point");
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  const auto e = analysis::find_thermal_equilibrium(kAtom, env);
  r.passed = std::abs(e.z_star_over_lambdaT - 0.52) <= 0.02 && e.curvature_positive;
  r.measured = "z*/lambda_T = " + fix(e.z_star_over_lambdaT, 5) + ", d2V/du2 = " + fix(e.curvature, 3) +
               " (target 0.52 +- 0.02, positive)";
  return r;
}

CriterionResult attractivity(bool quick) {
  CriterionResult r = start(9, "Attractivity");
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  const auto total = [&](double z) { return total_potential(kAtom, env, z).total; };
  int bad = 0;
  int n = quick ? 50 : 200;
  double weakest = std::numeric_limits<double>::infinity();
  for (double u : logspace(1e-3, 10.0, n)) {
    const double z = u * env.lambda_T;
    const double slope = analysis::five_point_derivative(total, z, 1e-4 * z);
    if (!(slope > 0.0)) ++bad;
    weakest = std::min(weakest, slope * z / std::abs(total(z)));
  }
  r.passed = bad == 0;
  r.measured = std::to_string(n - bad) + "/" + std::to_string(n) +
               " points with dV/dz > 0; min z V'/|V| = " + fix(weakest, 4);
  return r;
}

CriterionResult thermal_smallness(bool) {
  CriterionResult r = start(10, "Thermal smallness at short range");
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  const double z = 0.1 * env.lambda_T;
  const double vt = thermal_potential_exact(kAtom, env, z);
  const double v0 = vacuum_potential(kAtom, z);
  const double ratio = std::abs(vt) / std::abs(v0);
  const double varying = std::abs(vt - thermal_contact_constant(kAtom, env)) / std::abs(v0);
  r.passed = ratio < 1e-4;
  r.measured = "|V_T|/|V0| = " + sci(ratio) + " (limit 1e-4); z-dependent part alone " + sci(varying) +
               "; (z/lambda_T)^6 = " + sci(1e-6);
  return r;
}

CriterionResult room_temperature(bool) {
  CriterionResult r = start(11, "Room-temperature anchor");
  const double l = units::thermal_length_um(300.0, units::constants_from_environment());
  r.passed = l >= 7.55 && l <= 7.70;
  r.measured = "lambda_T(300 K) = " + fix(l, 4) + " um (window [7.55, 7.70])";
  return r;
}

CriterionResult identities(bool quick) {
  CriterionResult r = start(12, "Special-function identity suite");
  double p_err = 0.0;
  for (double eta : {0.01, 0.1, 1.0, 10.0}) {
    const long m_max = quick ? 200000 : 1000000;
    double sum = 0.0;
    for (long m = m_max; m >= 1; --m) sum += 1.0 / (1.0 + static_cast<double>(m) * m * eta * eta);
    sum += (kPi / 2.0 - std::atan((m_max + 0.5) * eta)) / eta;
    p_err = std::max(p_err, std::abs(specfun::bose_sum_p(eta) - sum));
  }
  double g_err = 0.0;
  const double h = 1e-5;
  for (double x : logspace(0.1, 50.0, 200)) {
    const double fd = (specfun::auxiliary_f(x + h) - specfun::auxiliary_f(x - h)) / (2.0 * h);
    g_err = std::max(g_err, std::abs(specfun::auxiliary_g(x) - fd));
  }
  double f_err = 0.0;
  for (double x : logspace(0.05, 100.0, quick ? 15 : 50)) {
    f_err = std::max(f_err, std::abs(oracle::f_integral_oracle(x).value / specfun::auxiliary_f(x) - 1.0));
  }
  const double z2 = std::abs(specfun::zeta_even(1) - kPi * kPi / 6.0);
  const double z4 = std::abs(specfun::zeta_even(2) - std::pow(kPi, 4) / 90.0);
  const bool zeta_ok = z2 <= 2.0 * std::numeric_limits<double>::epsilon() * (kPi * kPi / 6.0) &&
                         z4 <= 2.0 * std::numeric_limits<double>::epsilon() * (std::pow(kPi, 4) / 90.0);
  const double bose = std::abs(oracle::bose_integral_quadrature(3).value / (std::pow(kPi, 4) / 15.0) - 1.0);
  r.passed = p_err < 1e-10 && g_err < 1e-7 && f_err < 1e-10 && zeta_ok && bose < 1e-10;
  r.measured = "P " + sci(p_err) + " (1e-10); G vs dF/dx " + sci(g_err) + " (1e-7); F vs integral " + sci(f_err) +
               " (1e-10); zeta(2) " + sci(z2) + ", zeta(4) " + sci(z4) + " (2 ulp); Bose n=3 " + sci(bose) +
               " (1e-10)";
  return r;
}

CriterionResult dispersion(bool) {
  CriterionResult r = start(13, "Dispersion insensitivity");
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  Worst w;
  double max_full = 0.0;
  double max_diff = 0.0;
  for (double u : linspace(0.05, 2.0, 40)) {
    const double z = u * env.lambda_T;
    const double full = oracle::thermal_quadrature(kAtom, env, z).value;
    const double plain = oracle::thermal_quadrature(kAtom, env, z, {false}).value;
    w.update(std::abs(plain / full - 1.0), u);
    max_full = std::max(max_full, std::abs(full));
    max_diff = std::max(max_diff, std::abs(plain - full));
  }
  r.passed = w.value < 0.01;
  r.measured = "max pointwise rel diff " + sci(w.value) + " at z/lambda_T = " + fix(w.at, 3) +
               " (limit 1e-2; V_T changes sign near 0.31); max |diff| / max |V_T| = " + sci(max_diff / max_full);
  return r;
}

CriterionResult short_expansion_report(bool quick) {
  CriterionResult r = start(14, "Short-distance expansion measurement");
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  Worst w;
  for (double u : logspace(1e-3, kShortLeadingMaxU, quick ? 8 : 25)) {
    const double z = u * env.lambda_T;
    w.update(std::abs(thermal_short_expansion(kAtom, env, z) / thermal_potential_exact(kAtom, env, z) - 1.0), u);
  }
  r.passed = true;
  r.open_question = true;
  r.measured = "as-printed expansion vs exact series for z < 0.05 lambda_T: max rel discrepancy " + sci(w.value) +
               " at z/lambda_T = " + fix(w.at, 4) + " (reported, flagged open question)";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(bool quick) {
  const std::vector<std::function<CriterionResult(bool)>> checks = {
      vacuum_oracle, thermal_oracle,   nonretarded_limit,  retarded_limit, lifshitz_limit,
      thermal_constant, short_law,     equilibrium,        attractivity,   thermal_smallness,
      room_temperature, identities,    dispersion,         short_expansion_report};
  std::vector<CriterionResult> out;
  for (const auto& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r = check(quick);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(r);
  }
  // Runtime budgets of the two oracle sweeps.
  if (out[0].seconds >= 60.0) {
    out[0].passed = false;
    out[0].measured += "; runtime over 60 s";
  }
  if (out[1].seconds >= 120.0) {
    out[1].passed = false;
    out[1].measured += "; runtime over 120 s";
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char id[8];
  std::snprintf(id, sizeof id, "%02d", r.id);
  const std::string tag = r.passed ? (r.open_question ? "OPEN-PASS" : "PASS") : "FAIL";
  return "[" + tag + "] " + id + " " + r.title + ": " + r.measured + " [" + fix(r.seconds, 2) + " s]";
}

}  // namespace cpwall::verify
