#pragma once

#include <utility>
#include <vector>

#include "fluxring/ring_core.hpp"

namespace fluxring {

/// Detection constants. The paper gives no criteria; these are conservative
/// fixed thresholds, exposed so callers can see what was applied.
namespace thresholds {
inline constexpr double kUniformResultant = 0.05;   // below: no direction at all
inline constexpr double kMaxCircularVariance = 0.9; // peak_angle precondition
inline constexpr double kSecondaryLobeRatio = 0.25; // above: multimodal
inline constexpr double kMinLobeWeight = 1e-3;      // fractional lobes kept
}  // namespace thresholds

/// Fractional-revival decomposition at tau = 1/k: lobe centers on the circle
/// and their integrated weights (sum to 1 before the weight cut).
struct LobeSet {
  std::vector<double> centers;  // radians, [0, 2 pi)
  std::vector<double> weights;
  int k = 0;
};

/// Return probability |<psi0|psi(tau)>|^2 for each tau in tau_grid.
/// tau_grid must be nonempty and sorted.
std::vector<std::pair<double, double>> autocorrelation_scan(
    const StateVector& psi0, double alpha, const std::vector<double>& tau_grid);

/// Mean resultant length of the density, in [0, 1].
double circular_resultant(const AngularDensity& density);

/// Circular mean direction of the density, in [0, 2 pi).
double circular_mean(const AngularDensity& density);

/// Circular standard deviation about a given center (second moment of the
/// wrapped signed distance).
double circular_std(const AngularDensity& density, double center);

/// Direction of the dominant lobe, in [0, 2 pi): circular mean direction,
/// cross-checked against the quadratically interpolated argmax bin.
/// Throws UniformDensityError (resultant < 0.05) or MultiModalError
/// (secondary lobe above 25% of the primary mass).
double peak_angle(const AngularDensity& density);

/// Evolve psi0 to tau = 1/k (alpha = 0), partition the circle into arcs around
/// the lattice phi0 + 2 pi j / k, and integrate the density per arc.
/// Throws OverlapError if the packet width reaches half the lobe spacing.
LobeSet fractional_lobes(const StateVector& psi0, int k,
                         int grid_size = kDefaultGridSize);

}  // namespace fluxring
