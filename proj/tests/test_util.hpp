#pragma once

// Shared test helpers: seeded random states, the character-sum (Gauss-sum)
// desk oracle for fractional revivals, and a Kolmogorov-Smirnov statistic.
// Everything here is independent of the evolution code under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fluxring/ring_core.hpp"

namespace testutil {

inline fluxring::StateVector random_state(std::mt19937_64& rng, int n_half = 40) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  fluxring::StateVector s;
  s.n_min = -n_half;
  s.n_max = n_half;
  s.amplitudes.resize(static_cast<size_t>(s.levels()));
  for (auto& a : s.amplitudes) a = {gauss(rng), gauss(rng)};
  const double inv = 1.0 / std::sqrt(s.norm_sq());
  for (auto& a : s.amplitudes) a *= inv;
  return s;
}

inline fluxring::StateVector random_packet(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  fluxring::PacketSpec spec;
  spec.delta_n = 1.0 + 19.0 * unif(rng);
  spec.n0 = static_cast<int>(rng() % 11) - 5;
  spec.phi0 = fluxring::constants::two_pi * unif(rng);
  return fluxring::make_gaussian_packet(spec);
}

// Weights |c_j|^2 of the exact expansion e^{-2 pi i n^2 / k} =
// sum_j c_j e^{-2 pi i j n / k}: the lobe weights of the tau = 1/k revival
// at rotations 2 pi j / k. Pure desk computation on k terms.
inline std::vector<double> gauss_sum_weights(int k) {
  std::vector<double> w(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    std::complex<double> c(0.0, 0.0);
    for (int n = 0; n < k; ++n) {
      const double phase =
          fluxring::constants::two_pi * (static_cast<double>(j) * n -
                                         static_cast<double>(n) * n) / k;
      c += std::polar(1.0, phase);
    }
    w[static_cast<size_t>(j)] = std::norm(c / static_cast<double>(k));
  }
  return w;
}

// Two-sided KS statistic of samples against the uniform distribution on
// [0, range).
inline double ks_uniform(std::vector<double> samples, double range) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double cdf = samples[i] / range;
    d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - cdf));
  }
  return d;
}

}  // namespace testutil
