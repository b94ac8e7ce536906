#include "fluxring/ring_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fluxring/constants.hpp"

namespace fluxring {

namespace {
constexpr double kTwoPi = constants::two_pi;
}

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const cplx& a : amplitudes) s += std::norm(a);
  return s;
}

int default_cutoff(double delta_n) {
  return std::max(static_cast<int>(std::ceil(6.0 * delta_n)), 8);
}

void validate(const RingConfig& cfg) {
  if (!(cfg.mass > 0.0)) throw std::invalid_argument("RingConfig: mass must be > 0");
  if (!(cfg.radius > 0.0)) throw std::invalid_argument("RingConfig: radius must be > 0");
}

double AngularDensity::angle(int k) const { return kTwoPi * k / grid_size; }

double AngularDensity::bin_width() const { return kTwoPi / grid_size; }

double AngularDensity::integral() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * bin_width();
}

StateVector pure_level(int n) {
  StateVector s;
  s.n_min = n;
  s.n_max = n;
  s.amplitudes = {cplx(1.0, 0.0)};
  return s;
}

StateVector make_gaussian_packet(const PacketSpec& spec) {
  if (!(spec.delta_n > 0.0))
    throw std::invalid_argument("PacketSpec: delta_n must be > 0");
  const int min_cut = static_cast<int>(std::ceil(6.0 * spec.delta_n));
  int cutoff = spec.cutoff;
  if (cutoff == 0) cutoff = default_cutoff(spec.delta_n);
  if (cutoff < min_cut)
    throw std::invalid_argument("PacketSpec: cutoff " + std::to_string(cutoff) +
                                " below tail-truncation bound " + std::to_string(min_cut));

  StateVector s;
  s.n_min = spec.n0 - cutoff;
  s.n_max = spec.n0 + cutoff;
  s.amplitudes.resize(static_cast<size_t>(s.levels()));
  for (int n = s.n_min; n <= s.n_max; ++n) {
    const double d = (n - spec.n0) / spec.delta_n;
    s.at(n) = std::exp(-d * d) * std::polar(1.0, -n * spec.phi0);
  }
  const double inv = 1.0 / std::sqrt(s.norm_sq());
  for (cplx& a : s.amplitudes) a *= inv;
  return s;
}

StateVector evolve(const StateVector& state, double tau, double alpha) {
  StateVector out = state;
  for (int n = out.n_min; n <= out.n_max; ++n) {
    const double x = n + alpha;
    // Reduce the exponent mod 1 before multiplying by 2 pi: keeps the exact
    // revival (integer exponent -> phase exactly 0) and limits phase roundoff.
    const double frac = std::fmod(x * x * tau, 1.0);
    if (frac != 0.0) out.at(n) *= std::polar(1.0, -kTwoPi * frac);
  }
  return out;
}

StateVector rotate(const StateVector& state, double angle) {
  const double a = std::fmod(angle, kTwoPi);
  StateVector out = state;
  if (a == 0.0) return out;
  for (int n = out.n_min; n <= out.n_max; ++n)
    out.at(n) *= std::polar(1.0, -n * a);
  return out;
}

int min_grid_size(const StateVector& state) { return 4 * state.levels(); }

AngularDensity position_density(const StateVector& state, int grid_size) {
  if (grid_size < min_grid_size(state))
    throw EnvelopeError("position_density: grid_size " + std::to_string(grid_size) +
                        " below Nyquist margin " + std::to_string(min_grid_size(state)));

  AngularDensity d;
  d.grid_size = grid_size;
  d.values.resize(static_cast<size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k) {
    const double phi = kTwoPi * k / grid_size;
    cplx psi(0.0, 0.0);
    for (int n = state.n_min; n <= state.n_max; ++n)
      psi += state.at(n) * std::polar(1.0, n * phi);
    d.values[static_cast<size_t>(k)] = std::norm(psi) / kTwoPi;
  }
  return d;
}

double fidelity(const StateVector& a, const StateVector& b) {
  const int lo = std::max(a.n_min, b.n_min);
  const int hi = std::min(a.n_max, b.n_max);
  cplx overlap(0.0, 0.0);
  for (int n = lo; n <= hi; ++n) overlap += std::conj(a.at(n)) * b.at(n);
  return std::norm(overlap);
}

double revival_time(double mass_kg, double radius_m) {
  if (!(mass_kg > 0.0) || !(radius_m > 0.0))
    throw std::invalid_argument("revival_time: mass and radius must be > 0");
  return 4.0 * constants::pi * mass_kg * radius_m * radius_m / constants::hbar;
}

double flux_to_alpha(double flux_wb) {
  return flux_wb * constants::elementary_charge / constants::planck_h;
}

double alpha_to_flux(double alpha) {
  return alpha * constants::planck_h / constants::elementary_charge;
}

double wrap_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

double signed_circular_distance(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d > constants::pi) d -= kTwoPi;
  if (d <= -constants::pi) d += kTwoPi;
  return d;
}

double circular_distance(double a, double b) {
  return std::abs(signed_circular_distance(a, b));
}

}  // namespace fluxring
