#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fluxring/ring_core.hpp"

namespace fluxring {

/// One simulated single-shot experiment. Flux is observable mod hc/2e, which
/// is period 1/2 in alpha; alpha_true_mod, alpha_est and circular_error all
/// live on that circle.
struct TrialRecord {
  std::uint64_t seed = 0;
  double sampled_angle = 0.0;   // radians, [0, 2 pi)
  double alpha_true_mod = 0.0;  // [0, 1/2)
  double alpha_est = 0.0;       // [0, 1/2)
  double circular_error = 0.0;  // [0, 1/4], alpha units
};

struct ErrorReport {
  double delta_n = 0.0;
  int trials = 0;
  double rms_relative_error = 0.0;  // RMS(circular_error) / (1/2)
  double mean_bias = 0.0;           // mean signed error on the mod-1/2 circle
};

/// Counter-based per-trial seed: deterministic, pairwise distinct, order-free.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

/// Inverse-CDF draw over the piecewise-constant grid density with intra-bin
/// uniform jitter. Deterministic for a fixed seed.
double sample_position(const AngularDensity& density, std::uint64_t seed);

/// Invert phi = 2 phi_AB = 4 pi alpha: ((angle - phi0) mod 2 pi) / (4 pi),
/// in [0, 1/2).
double estimate_flux(double sampled_angle, double phi0);

double alpha_mod_half(double alpha);                       // into [0, 1/2)
double circular_error_alpha(double est, double truth);     // [0, 1/4]
double signed_error_alpha(double est, double truth);       // (-1/4, 1/4]

/// Build, evolve to tau = 1, sample once, estimate.
TrialRecord run_trial(const PacketSpec& spec, double alpha, std::uint64_t seed);

/// Independent trials with seeds derive_seed(base_seed, i). Deterministic and
/// schedule-independent for any thread count. Requires trials >= 100.
std::vector<TrialRecord> monte_carlo_trials(const PacketSpec& spec, double alpha,
                                            int trials, std::uint64_t base_seed,
                                            int threads = 1);
ErrorReport monte_carlo(const PacketSpec& spec, double alpha, int trials,
                        std::uint64_t base_seed, int threads = 1);
ErrorReport summarize(const std::vector<TrialRecord>& records, double delta_n);

/// Multi-slit reference: theta1 = asin(r mod 1), theta2 = asin((r mod 1) - 1)
/// for r = Phi/Phi0, slit spacing d = lambda.
std::pair<double, double> grating_angles(double flux_ratio);

}  // namespace fluxring
