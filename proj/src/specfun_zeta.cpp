#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "cpwall/errors.hpp"
#include "cpwall/specfun.hpp"

namespace cpwall::specfun {

namespace {

constexpr double kEps = 1e-17;
constexpr int kBernoulliTerms = 30;

// |B_{2m}| = numerator / denominator for m = 1..15; all numerators are exact in double.
constexpr std::array<std::array<double, 2>, 15> kBernoulliAbs = {{
    {1.0, 6.0},
    {1.0, 30.0},
    {1.0, 42.0},
    {1.0, 30.0},
    {5.0, 66.0},
    {691.0, 2730.0},
    {7.0, 6.0},
    {3617.0, 510.0},
    {43867.0, 798.0},
    {174611.0, 330.0},
    {854513.0, 138.0},
    {236364091.0, 2730.0},
    {8553103.0, 6.0},
    {23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

struct Tables {
  std::array<double, kZetaEvenMax + 1> zeta{};
  std::array<double, kBernoulliTerms + 1> scaled_bernoulli{};
};

double dirichlet_even(int m) {
  // sum_k k^{-2m}; only called for m >= 16 where a handful of terms suffices.
  double sum = 1.0;
  for (int k = 2; k < 64; ++k) {
    const double term = std::pow(static_cast<double>(k), -2.0 * m);
    sum += term;
    if (term < kEps) break;
  }
  return sum;
}

Tables build_tables() {
  Tables t;
  const double two_pi = 2.0 * kPi;
  double factorial = 1.0;  // (2m)!
  double power = 1.0;      // (2 pi)^{2m}
  for (int m = 1; m <= kZetaEvenMax; ++m) {
    if (m <= static_cast<int>(kBernoulliAbs.size())) {
      factorial *= (2.0 * m - 1.0) * (2.0 * m);
      power *= two_pi * two_pi;
      const double bernoulli = kBernoulliAbs[m - 1][0] / kBernoulliAbs[m - 1][1];
      t.zeta[m] = bernoulli * power / (2.0 * factorial);
    } else {
      t.zeta[m] = dirichlet_even(m);
    }
  }
  // B_{2j}/(2j)! = (-1)^{j+1} 2 zeta(2j) / (2 pi)^{2j}
  for (int j = 1; j <= kBernoulliTerms; ++j) {
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    t.scaled_bernoulli[j] = sign * 2.0 * t.zeta[j] / std::pow(two_pi, 2.0 * j);
  }
  return t;
}

const Tables& tables() {
  static const Tables t = build_tables();
  return t;
}

bool is_nonpositive_integer(ComplexValue z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

void require_finite(ComplexValue z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": argument is not finite");
  }
}

ComplexValue digamma(ComplexValue z) {
  // Shift right until Re w >= 15, then the Bernoulli asymptotic series.
  ComplexValue shift = 0.0;
  ComplexValue w = z;
  while (w.real() < 15.0) {
    shift += 1.0 / w;
    w += 1.0;
  }
  const ComplexValue inv2 = 1.0 / (w * w);
  ComplexValue power = 1.0;
  ComplexValue series = 0.0;
  double factorial = 1.0;  // (2j-1)!
  for (int j = 1; j <= 20; ++j) {
    power *= inv2;
    if (j > 1) factorial *= (2.0 * j - 2.0) * (2.0 * j - 1.0);
    // B_{2j} / (2j) = b_j (2j-1)!
    const ComplexValue term = detail::scaled_bernoulli(j) * factorial * power;
    series += term;
    if (std::abs(term) < kEps * std::abs(series)) break;
  }
  return std::log(w) - 0.5 / w - series - shift;
}

ScaledComplex normalise(ScaledComplex v) {
  const double magnitude = std::abs(v.mantissa);
  if (magnitude > 0.0 && std::isfinite(magnitude)) {
    v.log_scale += std::log(magnitude);
    v.mantissa /= magnitude;
  }
  return v;
}

}  // namespace

namespace detail {

double zeta_even_unchecked(int m) {
  if (m < 1) throw DomainError("zeta_even: m must be >= 1");
  if (m <= kZetaEvenMax) return tables().zeta[m];
  return dirichlet_even(m);
}

double scaled_bernoulli(int j) {
  if (j < 1 || j > kBernoulliTerms) throw DomainError("scaled_bernoulli: index out of range");
  return tables().scaled_bernoulli[j];
}

}  // namespace detail

ComplexValue ScaledComplex::value() const { return mantissa * std::exp(log_scale); }

double zeta_even(int m) {
  if (m < 1 || m > kZetaEvenMax) {
    throw DomainError("zeta_even: m must lie in [1, " + std::to_string(kZetaEvenMax) + "]");
  }
  return tables().zeta[m];
}

ScaledComplex hurwitz_zeta_scaled(int s, ComplexValue a) {
  require_finite(a, "hurwitz_zeta");
  if (s < 2) throw DomainError("hurwitz_zeta: s must be >= 2");
  if (is_nonpositive_integer(a)) throw PoleError("hurwitz_zeta: a is a nonpositive integer");

  // Reference radius: the smallest |a + k|, so every scaled term is <= 1.
  double reference = std::abs(a);
  if (a.real() < 0.0) {
    const double k_star = std::floor(-a.real());
    for (double k = std::max(0.0, k_star - 1.0); k <= k_star + 1.0; k += 1.0) {
      reference = std::min(reference, std::abs(a + k));
    }
  }
  const double ds = s;
  const double log_reference = std::log(reference);
  // Real part beyond which the Euler-Maclaurin tail converges quickly for this s.
  const double tail_start = std::max(12.0, (ds + 50.0) / kPi);

  ComplexValue sum = 0.0;
  for (long k = 0;; ++k) {
    const ComplexValue w = a + static_cast<double>(k);
    if (w.real() >= tail_start) {
      // zeta(s, w) ~ w^{1-s}/(s-1) + w^{-s}/2 + sum_j b_j (s)_{2j-1} w^{-s-2j+1}
      const ComplexValue scaled_power = std::exp(-ds * (std::log(w) - log_reference));
      const ComplexValue inv = 1.0 / w;
      const ComplexValue inv2 = inv * inv;
      ComplexValue series = w / (ds - 1.0) + 0.5;
      ComplexValue rising = ds * inv;  // (s)_{2j-1} w^{1-2j}
      for (int j = 1; j <= kBernoulliTerms; ++j) {
        if (j > 1) rising *= (ds + 2.0 * j - 3.0) * (ds + 2.0 * j - 2.0) * inv2;
        const ComplexValue term = detail::scaled_bernoulli(j) * rising;
        series += term;
        if (std::abs(term) < kEps * std::abs(series)) break;
      }
      sum += scaled_power * series;
      break;
    }
    sum += std::exp(-ds * (std::log(w) - log_reference));
    if (w.real() > 0.0) {
      // Remaining terms bounded by (Re w + 1)^{-s} (1 + (Re w + 1)/(s - 1)).
      const double next = w.real() + 1.0;
      const double bound = std::exp(-ds * (std::log(next) - log_reference)) * (1.0 + next / (ds - 1.0));
      if (bound < kEps * std::abs(sum)) break;
    }
  }
  return normalise({sum, -ds * log_reference});
}

ComplexValue hurwitz_zeta(int s, ComplexValue a) {
  const ScaledComplex v = hurwitz_zeta_scaled(s, a);
  if (v.log_scale > std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("hurwitz_zeta: value overflows double");
  }
  return v.value();
}

ScaledComplex polygamma_scaled(int m, ComplexValue z) {
  require_finite(z, "polygamma");
  if (m < 0 || m > kPolygammaMaxOrder) {
    throw DomainError("polygamma: order must lie in [0, " + std::to_string(kPolygammaMaxOrder) + "]");
  }
  if (is_nonpositive_integer(z)) throw PoleError("polygamma: pole at a nonpositive integer");
  if (m == 0) return {digamma(z), 0.0};
  // psi^(m)(z) = (-1)^{m+1} m! zeta(m+1, z)
  ScaledComplex h = hurwitz_zeta_scaled(m + 1, z);
  if (m % 2 == 0) h.mantissa = -h.mantissa;
  h.log_scale += std::lgamma(m + 1.0);
  return h;
}

ComplexValue polygamma(int m, ComplexValue z) {
  const ScaledComplex v = polygamma_scaled(m, z);
  if (v.log_scale > std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("polygamma: value overflows double");
  }
  return v.value();
}

double bose_sum_p(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("bose_sum_p: eta must be positive and finite");
  if (eta <= branch::kBoseSumSeriesMin) {
    return kPi / (2.0 * eta * std::tanh(kPi / eta)) - 0.5;
  }
  // sum_{k>=1} (-1)^{k+1} zeta(2k) eta^{-2k}
  const double inv2 = 1.0 / (eta * eta);
  double power = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    power *= -inv2;
    const double term = -power * detail::zeta_even_unchecked(k);
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return sum;
}

double q_series(double x) {
  if (!std::isfinite(x)) throw DomainError("q_series: x must be finite");
  if (x <= 1.0) throw DomainError("q_series: series diverges for x <= 1");
  constexpr long kMaxTerms = 10'000'000;
  const double inv2 = 1.0 / (x * x);
  double power = inv2;  // x^{-2m}
  double sum = 0.0;
  for (long m = 2; m < kMaxTerms; ++m) {
    power *= inv2;
    if (power == 0.0) return sum;
    const double weight = 1.0 - 1.0 / static_cast<double>(m);
    const double zeta = m <= kZetaEvenMax ? detail::zeta_even_unchecked(static_cast<int>(m)) : 1.0;
    const double term = (m % 2 == 0 ? 1.0 : -1.0) * weight * zeta * power;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) return sum;
  }
  throw ConvergenceError("q_series: no convergence within the term cap");
}

}  // namespace cpwall::specfun
