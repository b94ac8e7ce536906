#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "fluxring/ring_core.hpp"

namespace fluxring {

/// Wavefunction sampled on the uniform angle grid phi_k = 2 pi k / M,
/// normalized so (2 pi / M) sum |values|^2 = 1.
struct GridState {
  int grid_size = 0;
  std::vector<cplx> values;
  double tau = 0.0;

  double norm_sq() const;  // (2 pi / M) sum |values|^2
  AngularDensity density() const;
};

/// Documented stability/accuracy envelope for the implicit-midpoint stepper.
inline constexpr double kMaxGridStep = 1e-4;

/// Pointwise synthesis Psi(phi_k); same Nyquist margin as position_density.
GridState from_state_vector(const StateVector& state, int grid_size);

/// Cayley (implicit midpoint) propagator for the dimensionless Hamiltonian
/// H = 2 pi (-i d/dphi + alpha)^2 with the covariant derivative discretized by
/// fourth-order central differences on the periodic grid. The step operator
/// (I + i dtau H / 2)^{-1} (I - i dtau H / 2) is exactly unitary up to the
/// linear-solver tolerance; the factorization is reused across steps.
class CayleyPropagator {
 public:
  CayleyPropagator(int grid_size, double dtau, double alpha);
  ~CayleyPropagator();
  CayleyPropagator(CayleyPropagator&&) noexcept;
  CayleyPropagator& operator=(CayleyPropagator&&) noexcept;

  /// One step; throws SolverError (with the residual) on non-convergence.
  void step(GridState& state) const;

  double dtau() const { return dtau_; }
  double alpha() const { return alpha_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  double dtau_ = 0.0;
  double alpha_ = 0.0;
};

/// Single-step convenience form; builds a propagator per call.
GridState step(const GridState& state, double dtau, double alpha);

/// Oracle driver: synthesize, step to tau, return |Psi|^2. Never used in the
/// estimation path.
AngularDensity evolve_grid(const StateVector& state0, double tau, double alpha,
                           int grid_size, double dtau);

/// sqrt((2 pi / M) sum |a - b|^2) between a grid state and the synthesis of a
/// spectral state on the same grid.
double l2_distance(const GridState& grid, const StateVector& spectral);
double l2_distance(const AngularDensity& a, const AngularDensity& b);

}  // namespace fluxring
