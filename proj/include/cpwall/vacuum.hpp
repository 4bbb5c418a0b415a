#pragma once

#include "cpwall/types.hpp"

namespace cpwall {

/// H0(x) = (x^2 - 2) F(x) + 2 x G(x) - x.
double h0(double x0);

namespace detail {
double h0_closed(double x0);
/// Sum_n c_n x^{1-2n}, c_n = (-1)^n [(2n)! + 2 (2n-1)! + 2 (2n-2)!], cut at the smallest term.
double h0_asymptotic(double x0);
}  // namespace detail

/// V0(z) = k0 alpha0 / (8 pi z^3) H0(2 k0 z). Always negative.
double vacuum_potential(const AtomParams& atom, double z);

/// -omega0 alpha0 / (8 z^3) (hbar = c = 1, so omega0 = k0).
double nonretarded_asymptote(const AtomParams& atom, double z);

/// -(3 / 8 pi) alpha0 / z^4.
double retarded_asymptote(const AtomParams& atom, double z);

Regime classify_regime(double x0);

}  // namespace cpwall
