#include "cpwall/vacuum.hpp"

#include <cmath>

#include "cpwall/errors.hpp"
#include "cpwall/specfun.hpp"

namespace cpwall {

namespace detail {

double h0_closed(double x) {
  const auto [f, g] = specfun::auxiliary_fg(x);
  return (x * x - 2.0) * f + 2.0 * x * g - x;
}

double h0_asymptotic(double x) {
  const double inv2 = 1.0 / (x * x);
  // c_n / (2n-2)! = (-1)^n [(2n)(2n-1) + 2(2n-1) + 2]
  double scale = 1.0 / x;  // (2n-2)! x^{1-2n}
  double sum = 0.0;
  double previous = INFINITY;
  for (int n = 1; n < 200; ++n) {
    if (n > 1) scale *= (2.0 * n - 3.0) * (2.0 * n - 2.0) * inv2;
    const double m = 2.0 * n;
    const double term = (n % 2 ? -1.0 : 1.0) * (m * (m - 1.0) + 2.0 * (m - 1.0) + 2.0) * scale;
    if (std::abs(term) >= previous) break;
    sum += term;
    previous = std::abs(term);
    if (previous < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace detail

double h0(double x0) {
  if (!(x0 > 0.0) || !std::isfinite(x0)) throw DomainError("h0: x0 must be positive and finite");
  if (x0 >= specfun::branch::kH0AsymptoticMin) return detail::h0_asymptotic(x0);
  return detail::h0_closed(x0);
}

double vacuum_potential(const AtomParams& atom, double z) {
  atom.validate();
  require_distance(z, "vacuum_potential");
  return energy_prefactor(atom, z) * h0(2.0 * atom.k0 * z);
}

double nonretarded_asymptote(const AtomParams& atom, double z) {
  atom.validate();
  require_distance(z, "nonretarded_asymptote");
  return -atom.k0 * atom.alpha0 / (8.0 * z * z * z);
}

double retarded_asymptote(const AtomParams& atom, double z) {
  atom.validate();
  require_distance(z, "retarded_asymptote");
  return -3.0 * atom.alpha0 / (8.0 * specfun::kPi * z * z * z * z);
}

Regime classify_regime(double x0) {
  if (!(x0 > 0.0)) throw DomainError("classify_regime: x0 must be positive");
  if (x0 < kNonRetardedMaxX0) return Regime::non_retarded;
  if (x0 > kRetardedMinX0) return Regime::retarded;
  return Regime::crossover;
}

}  // namespace cpwall
