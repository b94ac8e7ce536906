#pragma once

#include "fluxring/ring_core.hpp"

namespace fluxring {

/// Dimensionless radius rho = R / (hbar / (m c)), radius in reduced Compton
/// wavelengths. Carries the whole relativistic correction scale.
double compton_rho(double mass_kg, double radius_m);

/// First-order relativistic phase picked up by level n over one revival time:
/// pi n^4 / (2 rho^2).
double rel_phase_shift(int n, double rho);

/// Radius below which the level-dependent relativistic dephasing competes with
/// the packet width: (pi hbar / (m c)) sqrt(delta_n^5 / 2).
double min_radius(double delta_n, double mass_kg);

/// Operational reading of the "much greater than" radius bound: at
/// 10x min_radius the worst correction phase over |n| <= delta_n stays below
/// 0.1x the packet angular width.
inline constexpr double kRadiusMarginFactor = 10.0;

/// Spectral evolution with the first-order correction folded into the phase:
/// a_n -> a_n exp(-i [2 pi (n + alpha)^2 + pi n^4 / (2 rho^2)] tau).
StateVector evolve_corrected(const StateVector& state, double tau, double alpha,
                             double rho);

}  // namespace fluxring
