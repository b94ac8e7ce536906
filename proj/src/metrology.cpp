#include "fluxring/metrology.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "fluxring/constants.hpp"

namespace fluxring {

namespace {
constexpr double kTwoPi = constants::two_pi;
constexpr double kFourPi = 2.0 * constants::two_pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_uniform(std::uint64_t seed) {
  // [0, 1) with 53 random bits.
  return static_cast<double>(splitmix64(seed) >> 11) * 0x1.0p-53;
}

// Smallest power of two meeting the Nyquist margin, never below the default.
int trial_grid_size(const StateVector& state) {
  int m = kDefaultGridSize;
  while (m < min_grid_size(state)) m *= 2;
  return m;
}

// The tau = 1 density depends on alpha only mod 1/2 (exact flux periodicity),
// so trials reduce alpha before evolving; this makes modular blindness
// bit-exact, not just approximate.
AngularDensity trial_density(const PacketSpec& spec, double alpha_mod) {
  const StateVector psi = make_gaussian_packet(spec);
  const StateVector evolved = evolve(psi, 1.0, alpha_mod);
  return position_density(evolved, trial_grid_size(psi));
}

TrialRecord record_from_sample(const PacketSpec& spec, double alpha_mod,
                               std::uint64_t seed, double angle) {
  TrialRecord r;
  r.seed = seed;
  r.sampled_angle = angle;
  r.alpha_true_mod = alpha_mod;
  r.alpha_est = estimate_flux(angle, spec.phi0);
  r.circular_error = circular_error_alpha(r.alpha_est, alpha_mod);
  return r;
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
  return splitmix64(base_seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

double sample_position(const AngularDensity& density, std::uint64_t seed) {
  double total = 0.0;
  for (double v : density.values) total += v;
  const double target = unit_uniform(seed ^ 0xD1B54A32D192ED03ULL) * total;

  // values[k] samples the density at phi_k, so bin k covers
  // [phi_k - bw/2, phi_k + bw/2): the midpoint reading. Treating phi_k as the
  // left edge instead would bias every draw by half a bin.
  double cum = 0.0;
  const int m = density.grid_size;
  for (int k = 0; k < m; ++k) {
    const double mass = density.values[static_cast<size_t>(k)];
    if (cum + mass >= target && mass > 0.0) {
      const double frac = (target - cum) / mass;
      return wrap_angle((k + frac - 0.5) * density.bin_width());
    }
    cum += mass;
  }
  return wrap_angle(kTwoPi - 0.5 * density.bin_width());  // rounding fallthrough
}

double estimate_flux(double sampled_angle, double phi0) {
  return wrap_angle(sampled_angle - phi0) / kFourPi;
}

double alpha_mod_half(double alpha) {
  double a = std::fmod(alpha, 0.5);
  if (a < 0.0) a += 0.5;
  return a;
}

double signed_error_alpha(double est, double truth) {
  double d = std::fmod(est - truth, 0.5);
  if (d > 0.25) d -= 0.5;
  if (d <= -0.25) d += 0.5;
  return d;
}

double circular_error_alpha(double est, double truth) {
  return std::abs(signed_error_alpha(est, truth));
}

TrialRecord run_trial(const PacketSpec& spec, double alpha, std::uint64_t seed) {
  const double alpha_mod = alpha_mod_half(alpha);
  const AngularDensity density = trial_density(spec, alpha_mod);
  return record_from_sample(spec, alpha_mod, seed, sample_position(density, seed));
}

std::vector<TrialRecord> monte_carlo_trials(const PacketSpec& spec, double alpha,
                                            int trials, std::uint64_t base_seed,
                                            int threads) {
  if (trials < 100)
    throw std::invalid_argument("monte_carlo: need at least 100 trials");
  if (threads < 1) threads = 1;

  const double alpha_mod = alpha_mod_half(alpha);
  const AngularDensity density = trial_density(spec, alpha_mod);

  std::vector<TrialRecord> records(static_cast<size_t>(trials));
  auto worker = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const std::uint64_t seed = derive_seed(base_seed, static_cast<std::uint64_t>(i));
      records[static_cast<size_t>(i)] = record_from_sample(
          spec, alpha_mod, seed, sample_position(density, seed));
    }
  };

  if (threads == 1) {
    worker(0, trials);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (trials + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int begin = t * chunk;
      const int end = std::min(trials, begin + chunk);
      if (begin < end) pool.emplace_back(worker, begin, end);
    }
    for (std::thread& th : pool) th.join();
  }
  return records;
}

ErrorReport summarize(const std::vector<TrialRecord>& records, double delta_n) {
  ErrorReport report;
  report.delta_n = delta_n;
  report.trials = static_cast<int>(records.size());
  double sq = 0.0, bias = 0.0;
  for (const TrialRecord& r : records) {
    sq += r.circular_error * r.circular_error;
    bias += signed_error_alpha(r.alpha_est, r.alpha_true_mod);
  }
  report.rms_relative_error = std::sqrt(sq / records.size()) / 0.5;
  report.mean_bias = bias / records.size();
  return report;
}

ErrorReport monte_carlo(const PacketSpec& spec, double alpha, int trials,
                        std::uint64_t base_seed, int threads) {
  return summarize(monte_carlo_trials(spec, alpha, trials, base_seed, threads),
                   spec.delta_n);
}

std::pair<double, double> grating_angles(double flux_ratio) {
  double m = std::fmod(flux_ratio, 1.0);
  if (m < 0.0) m += 1.0;
  return {std::asin(m), std::asin(m - 1.0)};
}

}  // namespace fluxring
