#include "fluxring/revival.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fluxring/constants.hpp"

namespace fluxring {

namespace {
constexpr double kTwoPi = constants::two_pi;

// Sub-bin argmax via a parabola through the argmax bin and its neighbors.
double refined_argmax(const AngularDensity& d) {
  const int m = d.grid_size;
  const int i = static_cast<int>(
      std::max_element(d.values.begin(), d.values.end()) - d.values.begin());
  const double vm = d.values[static_cast<size_t>((i + m - 1) % m)];
  const double v0 = d.values[static_cast<size_t>(i)];
  const double vp = d.values[static_cast<size_t>((i + 1) % m)];
  const double denom = vm - 2.0 * v0 + vp;
  double delta = 0.0;
  if (denom != 0.0) delta = std::clamp(0.5 * (vm - vp) / denom, -0.5, 0.5);
  return wrap_angle((i + delta) * d.bin_width());
}

// Contiguous lobe masses, split at local minima of the circular sequence.
std::vector<double> lobe_masses(const AngularDensity& d) {
  const int m = d.grid_size;
  std::vector<int> minima;
  for (int i = 0; i < m; ++i) {
    const double prev = d.values[static_cast<size_t>((i + m - 1) % m)];
    const double next = d.values[static_cast<size_t>((i + 1) % m)];
    const double v = d.values[static_cast<size_t>(i)];
    if (v < prev && v <= next) minima.push_back(i);
  }
  if (minima.size() < 2) {
    double total = 0.0;
    for (double v : d.values) total += v * d.bin_width();
    return {total};
  }
  std::vector<double> masses;
  for (size_t s = 0; s < minima.size(); ++s) {
    const int begin = minima[s];
    const int end = minima[(s + 1) % minima.size()];
    double mass = 0.0;
    for (int i = begin; i % m != end; ++i)
      mass += d.values[static_cast<size_t>(i % m)] * d.bin_width();
    masses.push_back(mass);
  }
  return masses;
}
}  // namespace

std::vector<std::pair<double, double>> autocorrelation_scan(
    const StateVector& psi0, double alpha, const std::vector<double>& tau_grid) {
  if (tau_grid.empty())
    throw std::invalid_argument("autocorrelation_scan: empty tau grid");
  if (!std::is_sorted(tau_grid.begin(), tau_grid.end()))
    throw std::invalid_argument("autocorrelation_scan: tau grid must be sorted");
  std::vector<std::pair<double, double>> out;
  out.reserve(tau_grid.size());
  for (double tau : tau_grid)
    out.emplace_back(tau, fidelity(evolve(psi0, tau, alpha), psi0));
  return out;
}

double circular_resultant(const AngularDensity& d) {
  double s = 0.0, c = 0.0, total = 0.0;
  for (int k = 0; k < d.grid_size; ++k) {
    const double v = d.values[static_cast<size_t>(k)];
    s += v * std::sin(d.angle(k));
    c += v * std::cos(d.angle(k));
    total += v;
  }
  return total > 0.0 ? std::hypot(s, c) / total : 0.0;
}

double circular_mean(const AngularDensity& d) {
  double s = 0.0, c = 0.0;
  for (int k = 0; k < d.grid_size; ++k) {
    const double v = d.values[static_cast<size_t>(k)];
    s += v * std::sin(d.angle(k));
    c += v * std::cos(d.angle(k));
  }
  return wrap_angle(std::atan2(s, c));
}

double circular_std(const AngularDensity& d, double center) {
  double m2 = 0.0;
  for (int k = 0; k < d.grid_size; ++k) {
    const double dist = signed_circular_distance(d.angle(k), center);
    m2 += d.values[static_cast<size_t>(k)] * dist * dist * d.bin_width();
  }
  return std::sqrt(m2);
}

double peak_angle(const AngularDensity& d) {
  const double resultant = circular_resultant(d);
  if (resultant < thresholds::kUniformResultant)
    throw UniformDensityError("peak_angle: circular resultant " +
                              std::to_string(resultant) + " below " +
                              std::to_string(thresholds::kUniformResultant));

  std::vector<double> masses = lobe_masses(d);
  if (masses.size() > 1) {
    std::sort(masses.begin(), masses.end(), std::greater<>());
    if (masses[1] > thresholds::kSecondaryLobeRatio * masses[0])
      throw MultiModalError("peak_angle: secondary lobe mass " +
                            std::to_string(masses[1]) + " exceeds 25% of primary " +
                            std::to_string(masses[0]));
  }

  const double mean = circular_mean(d);
  const double argmax = refined_argmax(d);
  // A mean far from the interpolated argmax means the mass is not one clean
  // lobe even though the watershed found nothing above threshold.
  if (circular_distance(mean, argmax) > 0.1 * kTwoPi)
    throw MultiModalError("peak_angle: circular mean disagrees with argmax");
  return mean;
}

LobeSet fractional_lobes(const StateVector& psi0, int k, int grid_size) {
  if (k < 2) throw std::invalid_argument("fractional_lobes: k must be >= 2");

  const AngularDensity d0 = position_density(psi0, grid_size);
  const double phi0 = peak_angle(d0);
  const double width = 2.0 * circular_std(d0, phi0);
  const double spacing = kTwoPi / k;
  if (width >= 0.5 * spacing)
    throw OverlapError("fractional_lobes: packet width " + std::to_string(width) +
                       " >= half lobe spacing " + std::to_string(0.5 * spacing));

  const AngularDensity d = position_density(evolve(psi0, 1.0 / k, 0.0), grid_size);

  std::vector<double> weight(static_cast<size_t>(k), 0.0);
  std::vector<double> sin_sum(static_cast<size_t>(k), 0.0);
  std::vector<double> cos_sum(static_cast<size_t>(k), 0.0);
  for (int i = 0; i < d.grid_size; ++i) {
    const double phi = d.angle(i);
    const double rel = wrap_angle(phi - phi0);
    const int j = static_cast<int>(std::floor(rel / spacing + 0.5)) % k;
    const double v = d.values[static_cast<size_t>(i)] * d.bin_width();
    weight[static_cast<size_t>(j)] += v;
    sin_sum[static_cast<size_t>(j)] += v * std::sin(phi);
    cos_sum[static_cast<size_t>(j)] += v * std::cos(phi);
  }

  LobeSet lobes;
  lobes.k = k;
  for (int j = 0; j < k; ++j) {
    const double w = weight[static_cast<size_t>(j)];
    if (w < thresholds::kMinLobeWeight) continue;
    lobes.weights.push_back(w);
    lobes.centers.push_back(wrap_angle(
        std::atan2(sin_sum[static_cast<size_t>(j)], cos_sum[static_cast<size_t>(j)])));
  }
  return lobes;
}

}  // namespace fluxring
