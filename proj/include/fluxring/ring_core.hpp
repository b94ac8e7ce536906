#pragma once

#include <complex>
#include <vector>

#include "fluxring/errors.hpp"

namespace fluxring {

using cplx = std::complex<double>;

/// State of the particle on the ring, expanded over angular-momentum
/// eigenstates |n> = e^{in phi}/sqrt(2 pi) for n in [n_min, n_max].
/// Kept normalized: sum |a_n|^2 = 1.
struct StateVector {
  int n_min = 0;
  int n_max = 0;
  std::vector<cplx> amplitudes;  // index n - n_min

  int levels() const { return n_max - n_min + 1; }
  const cplx& at(int n) const { return amplitudes[static_cast<size_t>(n - n_min)]; }
  cplx& at(int n) { return amplitudes[static_cast<size_t>(n - n_min)]; }
  double norm_sq() const;
};

/// Gaussian-truncated packet parameters: a_n ~ exp(-((n-n0)/delta_n)^2),
/// centered at angle phi0, levels kept in n0 +- cutoff.
struct PacketSpec {
  double delta_n = 10.0;
  int n0 = 0;
  double phi0 = 0.0;
  int cutoff = 0;  // 0 means default_cutoff(delta_n)
};

/// Tail rule: max(ceil(6 delta_n), 8); Gaussian tail beyond 6 sigma-equivalents
/// is below double-precision noise.
int default_cutoff(double delta_n);

/// Physical ring parameters. alpha is the dimensionless flux, flux in units of
/// the full quantum h/e; stored unreduced (modular reductions happen in consumers).
struct RingConfig {
  double mass = 0.0;    // kg
  double radius = 0.0;  // m
  double alpha = 0.0;
  bool rel_enabled = false;
};
void validate(const RingConfig&);

/// |Psi(phi)|^2 sampled on the uniform grid phi_k = 2 pi k / M.
struct AngularDensity {
  int grid_size = 0;
  std::vector<double> values;

  double angle(int k) const;
  double bin_width() const;
  double integral() const;  // (2 pi / M) * sum values
};

StateVector pure_level(int n);
StateVector make_gaussian_packet(const PacketSpec& spec);

/// Exact spectral evolution: a_n -> a_n exp(-i 2 pi (n + alpha)^2 tau),
/// tau in units of the revival time T.
StateVector evolve(const StateVector& state, double tau, double alpha);

/// a_n -> a_n exp(-i n angle); shifts the density by +angle (mod 2 pi).
StateVector rotate(const StateVector& state, double angle);

/// Requires grid_size >= 4 * levels (Nyquist margin); throws EnvelopeError.
AngularDensity position_density(const StateVector& state, int grid_size);
int min_grid_size(const StateVector& state);

/// |<a|b>|^2; disjoint level ranges contribute zero.
double fidelity(const StateVector& a, const StateVector& b);

/// T = 4 pi m R^2 / hbar, in seconds.
double revival_time(double mass_kg, double radius_m);

/// alpha = flux / (h/e); the estimation modulus hc/2e corresponds to alpha mod 1/2.
double flux_to_alpha(double flux_wb);
double alpha_to_flux(double alpha);

double wrap_angle(double angle);                   // into [0, 2 pi)
double circular_distance(double a, double b);      // shortest arc, [0, pi]
double signed_circular_distance(double a, double b);  // a - b wrapped to (-pi, pi]

inline constexpr int kDefaultGridSize = 1024;

}  // namespace fluxring
