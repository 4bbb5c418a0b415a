#include <cmath>
#include <limits>

#include "cpwall/errors.hpp"
#include "cpwall/specfun.hpp"

namespace cpwall::specfun {

namespace {

constexpr double kEps = 1e-17;
constexpr int kMaxFractionTerms = 20000;

}  // namespace

namespace detail {

ComplexValue scaled_e1_series(ComplexValue w) {
  // E1(w) = -gamma - log w - sum_{k>=1} (-w)^k / (k k!)
  const ComplexValue minus_w = -w;
  const double radius = std::abs(w);
  ComplexValue power = 1.0;
  ComplexValue sum = 0.0;
  for (int k = 1; k < 1000; ++k) {
    power *= minus_w / static_cast<double>(k);
    const ComplexValue term = power / static_cast<double>(k);
    sum += term;
    if (k > radius && std::abs(term) < kEps * std::abs(sum)) break;
  }
  const ComplexValue e1 = -kEulerGamma - std::log(w) - sum;
  return std::exp(w) * e1;
}

ComplexValue scaled_e1_continued_fraction(ComplexValue w) {
  // e^w E1(w) = 1/(w+1- 1/(w+3- 4/(w+5- ...))), modified Lentz.
  constexpr double tiny = 1e-300;
  ComplexValue b = w + 1.0;
  ComplexValue c = 1.0 / tiny;
  ComplexValue d = 1.0 / b;
  ComplexValue h = d;
  for (int i = 1; i <= kMaxFractionTerms; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const ComplexValue delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 4e-16) return h;
  }
  throw ConvergenceError("scaled_e1: continued fraction did not converge");
}

ComplexValue scaled_e1_asymptotic(ComplexValue w) {
  // sum_k (-1)^k k! / w^{k+1}, cut at the smallest term.
  const ComplexValue inv = 1.0 / w;
  ComplexValue term = inv;
  ComplexValue sum = inv;
  double previous = std::abs(term);
  for (int k = 1; k < 400; ++k) {
    const ComplexValue next = term * (-static_cast<double>(k)) * inv;
    const double magnitude = std::abs(next);
    if (magnitude >= previous) break;
    sum += next;
    term = next;
    previous = magnitude;
    if (magnitude < kEps * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace detail

ComplexValue scaled_e1(ComplexValue w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError("scaled_e1: argument is not finite");
  }
  if (w.imag() == 0.0 && w.real() <= 0.0) {
    throw DomainError("scaled_e1: argument on the branch cut or at zero");
  }
  // Exact conjugate symmetry.
  if (w.imag() < 0.0) return std::conj(scaled_e1(std::conj(w)));

  const double radius = std::abs(w);
  if (radius >= branch::kE1AsymptoticRadius) return detail::scaled_e1_asymptotic(w);
  if (radius <= branch::kE1SeriesRadius) return detail::scaled_e1_series(w);
  if (w.real() < 0.0 && radius + w.real() <= branch::kE1CutBand) {
    return detail::scaled_e1_series(w);
  }
  return detail::scaled_e1_continued_fraction(w);
}

}  // namespace cpwall::specfun
