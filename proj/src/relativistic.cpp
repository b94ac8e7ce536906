#include "fluxring/relativistic.hpp"

#include <cmath>
#include <stdexcept>

#include "fluxring/constants.hpp"

namespace fluxring {

double compton_rho(double mass_kg, double radius_m) {
  if (!(mass_kg > 0.0) || !(radius_m > 0.0))
    throw std::invalid_argument("compton_rho: mass and radius must be > 0");
  return radius_m * mass_kg * constants::light_speed / constants::hbar;
}

double rel_phase_shift(int n, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("rel_phase_shift: rho must be > 0");
  const double n2 = static_cast<double>(n) * n;
  return constants::pi * n2 * n2 / (2.0 * rho * rho);
}

double min_radius(double delta_n, double mass_kg) {
  if (!(delta_n > 0.0)) throw std::invalid_argument("min_radius: delta_n must be > 0");
  if (!(mass_kg > 0.0)) throw std::invalid_argument("min_radius: mass must be > 0");
  const double compton = constants::hbar / (mass_kg * constants::light_speed);
  return constants::pi * compton * std::sqrt(std::pow(delta_n, 5) / 2.0);
}

StateVector evolve_corrected(const StateVector& state, double tau, double alpha,
                             double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("evolve_corrected: rho must be > 0");
  StateVector out = state;
  for (int n = out.n_min; n <= out.n_max; ++n) {
    const double x = n + alpha;
    const double frac = std::fmod(x * x * tau, 1.0);
    const double correction =
        std::fmod(rel_phase_shift(n, rho) * tau, constants::two_pi);
    const double phase = constants::two_pi * frac + correction;
    if (phase != 0.0) out.at(n) *= std::polar(1.0, -phase);
  }
  return out;
}

}  // namespace fluxring
