#include <cmath>
#include <string>

#include "cpwall/errors.hpp"
#include "cpwall/specfun.hpp"

namespace cpwall::specfun {

namespace {

constexpr double kEps = 1e-17;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument is not finite");
}

}  // namespace

void AccuracyBudget::validate() const {
  if (!(rel_tol_specfun > 0.0 && rel_tol_specfun <= rel_tol_composed && rel_tol_composed < 1e-3)) {
    throw DomainError("AccuracyBudget: require 0 < rel_tol_specfun <= rel_tol_composed < 1e-3");
  }
}

namespace detail {

double ci_series(double x) {
  // gamma + ln x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!)
  const double x2 = x * x;
  double power = 1.0;  // (-1)^k x^{2k} / (2k)!
  double sum = 0.0;
  for (int k = 1; k < 100; ++k) {
    power *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
    const double term = power / (2.0 * k);
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return kEulerGamma + std::log(x) + sum;
}

double si_series(double x) {
  // Si(x) = sum_{k>=0} (-1)^k x^{2k+1} / ((2k+1)(2k+1)!)
  const double x2 = x * x;
  double power = x;  // (-1)^k x^{2k+1} / (2k+1)!
  double sum = x;
  for (int k = 1; k < 100; ++k) {
    power *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
    const double term = power / (2.0 * k + 1.0);
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return sum - kPi / 2.0;
}

AuxiliaryPair auxiliary_fg_from_e1(double x) {
  // e^{ix} E1(ix) = -G(x) - i F(x)
  const ComplexValue e = scaled_e1(ComplexValue(0.0, x));
  return {-e.imag(), -e.real()};
}

double kernel_g_taylor(double x) {
  // G(x) = sum_k (-1)^k 2(2k+1)(k+1)/(2k+3)! x^{2k}
  const double x2 = x * x;
  double factorial = 6.0;  // (2k+3)!
  double power = 1.0;
  double sum = 0.0;
  for (int k = 0; k < 20; ++k) {
    if (k > 0) factorial *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
    const double term = power * 2.0 * (2.0 * k + 1.0) * (k + 1.0) / factorial;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
    power *= -x2;
  }
  return sum;
}

double kernel_g_closed(double x) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  return s / x + 2.0 * c / (x * x) - 2.0 * s / (x * x * x);
}

}  // namespace detail

double cosine_integral(double x) {
  require_finite(x, "cosine_integral");
  if (x <= 0.0) throw DomainError("cosine_integral: x must be positive");
  if (x < branch::kCiSiSeriesMax) return detail::ci_series(x);
  const auto [f, g] = detail::auxiliary_fg_from_e1(x);
  return f * std::sin(x) + g * std::cos(x);
}

double sine_integral_si(double x) {
  require_finite(x, "sine_integral_si");
  if (x < 0.0) throw DomainError("sine_integral_si: x must be nonnegative");
  if (x == 0.0) return -kPi / 2.0;
  if (x < branch::kCiSiSeriesMax) return detail::si_series(x);
  const auto [f, g] = detail::auxiliary_fg_from_e1(x);
  return -f * std::cos(x) + g * std::sin(x);
}

AuxiliaryPair auxiliary_fg(double x) {
  require_finite(x, "auxiliary_fg");
  if (x <= 0.0) throw DomainError("auxiliary_fg: x must be positive");
  if (x >= branch::kCiSiSeriesMax) return detail::auxiliary_fg_from_e1(x);
  const double ci = detail::ci_series(x);
  const double si = detail::si_series(x);
  const double s = std::sin(x);
  const double c = std::cos(x);
  return {ci * s - si * c, ci * c + si * s};
}

double auxiliary_f(double x) {
  if (x == 0.0) return kPi / 2.0;
  return auxiliary_fg(x).f;
}

double auxiliary_g(double x) { return auxiliary_fg(x).g; }

double kernel_g(double x) {
  require_finite(x, "kernel_g");
  x = std::abs(x);
  if (x < branch::kKernelTaylorMax) return detail::kernel_g_taylor(x);
  return detail::kernel_g_closed(x);
}

}  // namespace cpwall::specfun
