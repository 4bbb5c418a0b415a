#include <cmath>
#include <numbers>

#include "cpwall/analysis.hpp"
#include "cpwall/errors.hpp"
#include "cpwall/oracle.hpp"
#include "cpwall/specfun.hpp"
#include "cpwall/thermal.hpp"
#include "cpwall/vacuum.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "reference/reference_values.hpp"

using namespace cpwall;
using namespace cpwall::oracle;
using namespace testutil;
using std::numbers::pi;

namespace {
const AtomParams kAtom{1.0, 1.0};
}

TEST_SUITE("oracle") {

TEST_CASE("F integral representation") {
  CHECK(rel_err(f_integral_oracle(5.0).value, specfun::auxiliary_f(5.0)) < 1e-10);
  CHECK(rel_err(f_integral_oracle(0.1).value, specfun::auxiliary_f(0.1)) < 1e-9);
  CHECK(f_integral_oracle(1e6).value * 1e6 == doctest::Approx(1.0).epsilon(1e-10));
  for (double x : {0.05, 1.0, 30.0}) CHECK(f_integral_oracle(x).abs_error_estimate > 0.0);
  CHECK_THROWS_AS(f_integral_oracle(0.0), DomainError);
}

TEST_CASE("vacuum split quadrature reproduces the closed form") {
  const auto r = vacuum_split_quadrature(kAtom, 0.5, VacuumPart::total);
  CHECK(rel_err(r.value, vacuum_potential(kAtom, 0.5)) < 1e-8);
  CHECK(r.abs_error_estimate > 0.0);
  CHECK(r.extrapolation_steps == 5);
  CHECK(r.regulator_epsilon > 0.0);
}

TEST_CASE("rr dominates at short range, fr at long range") {
  for (double x0 : {0.01, 0.1}) {
    const auto v = vacuum_shift(kAtom, x0 / 2);
    CAPTURE(x0);
    CHECK(std::abs(v.rr_part) > std::abs(v.fr_part));
  }
  for (double x0 : {50.0, 100.0}) {
    const auto v = vacuum_shift(kAtom, x0 / 2);
    CAPTURE(x0);
    CHECK(std::abs(v.fr_part) > std::abs(v.rr_part));
  }
  CHECK(vacuum_shift(kAtom, 1.0).parts_from_quadrature);
  CHECK_FALSE(vacuum_shift(kAtom, 1.0, false).parts_from_quadrature);
}

TEST_CASE("rr + fr = total within the combined estimates") {
  for (double x0 : {0.1, 1.0, 10.0}) {
    const double z = x0 / 2;
    const auto rr = vacuum_split_quadrature(kAtom, z, VacuumPart::rr);
    const auto fr = vacuum_split_quadrature(kAtom, z, VacuumPart::fr);
    const auto total = vacuum_split_quadrature(kAtom, z, VacuumPart::total);
    CAPTURE(x0);
    CHECK(std::abs(rr.value + fr.value - total.value) <=
          rr.abs_error_estimate + fr.abs_error_estimate + total.abs_error_estimate);
  }
}

TEST_CASE("vacuum error estimates bracket the reference values") {
  for (const auto& p : reference::kH0) {
    if (p.x < 0.05 || p.x > 100.0) continue;
    const double z = p.x / 2;
    const auto r = vacuum_split_quadrature(kAtom, z, VacuumPart::total);
    CAPTURE(p.x);
    CHECK(std::abs(r.value - energy_prefactor(kAtom, z) * p.value) <= r.abs_error_estimate);
  }
}

TEST_CASE("thermal error estimates bracket the reference values") {
  for (const auto& p : reference::kThermalBracket) {
    if (p.theta < 30.0 || p.u > 2.0) continue;
    const auto env = ThermalEnvironment::from_theta(kAtom, p.theta);
    const double z = p.u * env.lambda_T;
    const auto r = thermal_quadrature(kAtom, env, z);
    CAPTURE(p.theta);
    CAPTURE(p.u);
    CHECK(std::abs(r.value - energy_prefactor(kAtom, z) * p.bracket) <= r.abs_error_estimate);
  }
}

TEST_CASE("one more regulator halving stays within the claimed error") {
  for (double x0 : {0.1, 1.0, 10.0, 100.0}) {
    const auto six = vacuum_split_quadrature(kAtom, x0 / 2, VacuumPart::total);
    const auto seven = vacuum_split_quadrature(kAtom, x0 / 2, VacuumPart::total, {0.1, 7, 0.0});
    CAPTURE(x0);
    CHECK(std::abs(six.value - seven.value) < six.abs_error_estimate);
  }
}

TEST_CASE("principal value is insensitive to the subtraction width") {
  for (double x0 : {2.0, 10.0, 50.0}) {
    const auto a = vacuum_split_quadrature(kAtom, x0 / 2, VacuumPart::fr, {0.1, 6, 0.25});
    const auto b = vacuum_split_quadrature(kAtom, x0 / 2, VacuumPart::fr, {0.1, 6, 0.5});
    CAPTURE(x0);
    CHECK(rel_err(a.value, b.value) < 1e-9);
  }
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  for (double u : {0.1, 0.52, 2.0}) {
    const double z = u * env.lambda_T;
    const auto a = thermal_quadrature(kAtom, env, z, {true, 0.25, 80.0});
    const auto b = thermal_quadrature(kAtom, env, z, {true, 0.5, 80.0});
    CAPTURE(u);
    CHECK(rel_err(a.value, b.value) < 1e-9);
  }
  CHECK_THROWS_AS(vacuum_split_quadrature(kAtom, 0.05, VacuumPart::fr, {0.1, 6, 0.2}), DomainError);
}

TEST_CASE("thermal quadrature near contact") {
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  const double l4 = std::pow(env.lambda_T, 4);
  const double v = thermal_quadrature(kAtom, env, 1e-4 * env.lambda_T).value * l4;
  CHECK(rel_err(v, thermal_contact_constant(kAtom, env) * l4) < 1e-5);
  CHECK(rel_err(v, 2.0 * std::pow(pi, 3) / 45.0) < 1e-3);
}

TEST_CASE("thermal quadrature slope vanishes near 0.52 lambda_T") {
  const auto env = ThermalEnvironment::from_theta(kAtom, 100.0);
  const auto f = [&](double u) { return thermal_quadrature(kAtom, env, u * env.lambda_T).value * std::pow(env.lambda_T, 4); };
  const double slope = analysis::five_point_derivative(f, 0.52, 1e-4);
  const double reference_slope = std::abs(analysis::five_point_derivative(f, 0.3, 1e-4));
  CHECK(std::abs(slope) < 0.05 * reference_slope);
}

TEST_CASE("thermal quadrature is zero in vacuum and rejects small theta") {
  CHECK(thermal_quadrature(kAtom, ThermalEnvironment::vacuum(), 1.0).value == 0.0);
  ThermalEnvironment cold;
  cold.lambda_T = 5.0;
  cold.theta = 5.0;
  CHECK_THROWS_AS(thermal_quadrature(kAtom, cold, 1.0), DomainError);
}

TEST_CASE("Bose integrals") {
  CHECK(bose_integral(3) == doctest::Approx(std::pow(pi, 4) / 15.0).epsilon(1e-15));
  CHECK(bose_integral(5) == doctest::Approx(8.0 * std::pow(pi, 6) / 63.0).epsilon(1e-15));
  for (int n : {1, 3, 5, 7}) {
    CAPTURE(n);
    CHECK(rel_err(bose_integral_quadrature(n).value, bose_integral(n)) < 1e-10);
  }
  CHECK_THROWS_AS(bose_integral(0), DomainError);
}

}  // TEST_SUITE
