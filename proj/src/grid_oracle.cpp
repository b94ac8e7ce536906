#include "fluxring/grid_oracle.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fluxring/constants.hpp"

namespace fluxring {

namespace {
constexpr double kTwoPi = constants::two_pi;

using SpMat = Eigen::SparseMatrix<cplx>;
using Vec = Eigen::VectorXcd;

// Fourth-order central first derivative, periodic wrap:
// (f_{k-2} - 8 f_{k-1} + 8 f_{k+1} - f_{k+2}) / (12 h).
SpMat derivative_matrix(int m) {
  const double h = kTwoPi / m;
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(static_cast<size_t>(4 * m));
  for (int k = 0; k < m; ++k) {
    trip.emplace_back(k, (k + m - 2) % m, cplx(1.0 / (12.0 * h), 0.0));
    trip.emplace_back(k, (k + m - 1) % m, cplx(-8.0 / (12.0 * h), 0.0));
    trip.emplace_back(k, (k + 1) % m, cplx(8.0 / (12.0 * h), 0.0));
    trip.emplace_back(k, (k + 2) % m, cplx(-1.0 / (12.0 * h), 0.0));
  }
  SpMat d(m, m);
  d.setFromTriplets(trip.begin(), trip.end());
  return d;
}

SpMat hamiltonian(int m, double alpha) {
  SpMat id(m, m);
  id.setIdentity();
  const SpMat cov = cplx(0.0, -1.0) * derivative_matrix(m) + alpha * id;
  return (kTwoPi * (cov * cov)).pruned();
}
}  // namespace

double GridState::norm_sq() const {
  double s = 0.0;
  for (const cplx& v : values) s += std::norm(v);
  return s * kTwoPi / grid_size;
}

AngularDensity GridState::density() const {
  AngularDensity d;
  d.grid_size = grid_size;
  d.values.resize(values.size());
  for (size_t k = 0; k < values.size(); ++k) d.values[k] = std::norm(values[k]);
  return d;
}

GridState from_state_vector(const StateVector& state, int grid_size) {
  if (grid_size < min_grid_size(state))
    throw EnvelopeError("from_state_vector: grid_size " + std::to_string(grid_size) +
                        " below Nyquist margin " + std::to_string(min_grid_size(state)));
  GridState g;
  g.grid_size = grid_size;
  g.values.resize(static_cast<size_t>(grid_size));
  const double norm = 1.0 / std::sqrt(kTwoPi);
  for (int k = 0; k < grid_size; ++k) {
    const double phi = kTwoPi * k / grid_size;
    cplx psi(0.0, 0.0);
    for (int n = state.n_min; n <= state.n_max; ++n)
      psi += state.at(n) * std::polar(1.0, n * phi);
    g.values[static_cast<size_t>(k)] = psi * norm;
  }
  return g;
}

struct CayleyPropagator::Impl {
  SpMat forward;   // I - i dtau H / 2
  SpMat backward;  // I + i dtau H / 2
  Eigen::SparseLU<SpMat> lu;
};

CayleyPropagator::CayleyPropagator(int grid_size, double dtau, double alpha)
    : impl_(std::make_unique<Impl>()), dtau_(dtau), alpha_(alpha) {
  if (grid_size < 8)
    throw EnvelopeError("CayleyPropagator: grid_size must be >= 8");
  if (!(dtau > 0.0) || dtau > kMaxGridStep)
    throw EnvelopeError("CayleyPropagator: dtau must be in (0, " +
                        std::to_string(kMaxGridStep) + "]");
  const SpMat h = hamiltonian(grid_size, alpha);
  SpMat id(grid_size, grid_size);
  id.setIdentity();
  const cplx half_step(0.0, 0.5 * dtau);
  impl_->forward = (id - half_step * h).pruned();
  impl_->backward = (id + half_step * h).pruned();
  impl_->lu.compute(impl_->backward);
  if (impl_->lu.info() != Eigen::Success)
    throw SolverError("CayleyPropagator: LU factorization failed");
}

CayleyPropagator::~CayleyPropagator() = default;
CayleyPropagator::CayleyPropagator(CayleyPropagator&&) noexcept = default;
CayleyPropagator& CayleyPropagator::operator=(CayleyPropagator&&) noexcept = default;

void CayleyPropagator::step(GridState& state) const {
  const int m = state.grid_size;
  Eigen::Map<const Vec> psi(state.values.data(), m);
  const Vec rhs = impl_->forward * psi;
  const Vec next = impl_->lu.solve(rhs);
  const double residual = (impl_->backward * next - rhs).norm() /
                          std::max(rhs.norm(), 1e-300);
  if (impl_->lu.info() != Eigen::Success || residual > 1e-8)
    throw SolverError("CayleyPropagator: solve residual " + std::to_string(residual));
  Eigen::Map<Vec>(state.values.data(), m) = next;
  state.tau += dtau_;
}

GridState step(const GridState& state, double dtau, double alpha) {
  CayleyPropagator prop(state.grid_size, dtau, alpha);
  GridState out = state;
  prop.step(out);
  return out;
}

AngularDensity evolve_grid(const StateVector& state0, double tau, double alpha,
                           int grid_size, double dtau) {
  if (!(tau > 0.0)) throw EnvelopeError("evolve_grid: tau must be > 0");
  GridState g = from_state_vector(state0, grid_size);
  const long steps = std::max(1L, std::lround(tau / dtau));
  const double dtau_eff = tau / static_cast<double>(steps);
  CayleyPropagator prop(grid_size, dtau_eff, alpha);
  for (long i = 0; i < steps; ++i) prop.step(g);
  return g.density();
}

double l2_distance(const GridState& grid, const StateVector& spectral) {
  const GridState reference = from_state_vector(spectral, grid.grid_size);
  double s = 0.0;
  for (size_t k = 0; k < grid.values.size(); ++k)
    s += std::norm(grid.values[k] - reference.values[k]);
  return std::sqrt(s * kTwoPi / grid.grid_size);
}

double l2_distance(const AngularDensity& a, const AngularDensity& b) {
  if (a.grid_size != b.grid_size)
    throw std::invalid_argument("l2_distance: grid sizes differ");
  double s = 0.0;
  for (size_t k = 0; k < a.values.size(); ++k) {
    const double d = a.values[k] - b.values[k];
    s += d * d;
  }
  return std::sqrt(s * kTwoPi / a.grid_size);
}

}  // namespace fluxring
