#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fluxring/constants.hpp"
#include "fluxring/ring_core.hpp"
#include "test_util.hpp"

using namespace fluxring;
namespace c = fluxring::constants;

namespace {
int argmax_bin(const AngularDensity& d) {
  return static_cast<int>(std::max_element(d.values.begin(), d.values.end()) -
                          d.values.begin());
}
}  // namespace

TEST_CASE("gaussian packet: width->0 limit collapses to a single level") {
  const StateVector s = make_gaussian_packet({0.01, 3, 0.0, 0});
  CHECK(std::norm(s.at(3)) > 1.0 - 1e-10);
  CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gaussian packet: centered density is even with argmax at phi0") {
  const StateVector s = make_gaussian_packet({10.0, 0, 0.0, 0});
  const AngularDensity d = position_density(s, 1024);
  CHECK(argmax_bin(d) == 0);
  for (int k = 1; k < d.grid_size; ++k)
    CHECK(d.values[size_t(k)] ==
          doctest::Approx(d.values[size_t(d.grid_size - k)]).epsilon(1e-10));

  const StateVector shifted = make_gaussian_packet({10.0, 0, c::pi, 0});
  CHECK(argmax_bin(position_density(shifted, 1024)) == 512);
}

TEST_CASE("gaussian packet: parameter validation") {
  CHECK_THROWS_AS(make_gaussian_packet({-1.0, 0, 0.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_gaussian_packet({0.0, 0, 0.0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_gaussian_packet({10.0, 0, 0.0, 30}), std::invalid_argument);
  CHECK(default_cutoff(10.0) == 60);
  CHECK(default_cutoff(0.01) == 8);
}

TEST_CASE("evolve: ground state is stationary, revival is exact") {
  const StateVector ground = pure_level(0);
  const StateVector moved = evolve(ground, 0.7313, 0.0);
  CHECK(moved.at(0) == ground.at(0));  // E_0 = 0, bit-exact

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = testutil::random_state(rng);
    CHECK(fidelity(evolve(psi, 1.0, 0.0), psi) >= 1.0 - 1e-12);
  }
}

TEST_CASE("evolve: quarter flux advances the revival peak by pi") {
  const StateVector psi = make_gaussian_packet({10.0, 0, 1.0, 0});
  const double f = fidelity(evolve(psi, 1.0, 0.25), rotate(psi, c::pi));
  CHECK(f >= 1.0 - 1e-12);
}

TEST_CASE("rotate: identities and density shift") {
  const StateVector psi = make_gaussian_packet({10.0, 2, 0.0, 0});
  const StateVector same = rotate(psi, 0.0);
  const StateVector full = rotate(psi, c::two_pi);
  for (int n = psi.n_min; n <= psi.n_max; ++n) {
    CHECK(same.at(n) == psi.at(n));
    CHECK(full.at(n) == psi.at(n));  // integer n: 2 pi rotation is exact identity
  }
  const AngularDensity d = position_density(rotate(psi, c::pi / 2.0), 1024);
  CHECK(circular_distance(d.angle(argmax_bin(d)), c::pi / 2.0) <= d.bin_width());
}

TEST_CASE("position_density: eigenstates are uniform") {
  for (int n : {-7, 0, 3}) {
    const AngularDensity d = position_density(pure_level(n), 64);
    for (double v : d.values)
      CHECK(v == doctest::Approx(1.0 / c::two_pi).epsilon(1e-12));
  }
}

TEST_CASE("position_density: two-level interference is (1+cos phi)/(2 pi)") {
  StateVector s;
  s.n_min = 0;
  s.n_max = 1;
  s.amplitudes = {cplx(1.0 / std::sqrt(2.0), 0.0), cplx(1.0 / std::sqrt(2.0), 0.0)};
  const AngularDensity d = position_density(s, 64);
  for (int k = 0; k < d.grid_size; ++k)
    CHECK(d.values[size_t(k)] ==
          doctest::Approx((1.0 + std::cos(d.angle(k))) / c::two_pi).epsilon(1e-12));
}

TEST_CASE("position_density: integral is 1, grid precondition enforced") {
  const StateVector psi = make_gaussian_packet({10.0, 0, 0.3, 0});
  CHECK(position_density(psi, 1024).integral() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(position_density(psi, 256), EnvelopeError);
}

TEST_CASE("position_density: packet width follows the 1/delta_n law") {
  // FWHM of |Psi|^2 for amplitudes exp(-(n/dn)^2) is 2 sqrt(2 ln 2)/dn,
  // the same 1/dn scale as the headline angular-resolution estimate.
  for (double dn : {5.0, 10.0, 20.0}) {
    const AngularDensity d =
        position_density(make_gaussian_packet({dn, 0, 0.0, 0}), 4096);
    const double half = d.values[0] / 2.0;
    int k = 0;
    while (d.values[size_t(k)] > half) ++k;
    const double fwhm = 2.0 * d.angle(k);  // symmetric about 0
    CHECK(fwhm * dn == doctest::Approx(2.0 * std::sqrt(2.0 * std::log(2.0))).epsilon(0.05));
    const double resolution_scale = 1.0 / (c::pi * dn);
    CHECK(fwhm / resolution_scale > 1.0);
    CHECK(fwhm / resolution_scale < 10.0);
  }
}

TEST_CASE("fidelity basics") {
  const StateVector psi = make_gaussian_packet({7.0, 1, 0.4, 0});
  CHECK(fidelity(psi, psi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity(pure_level(0), pure_level(1)) == 0.0);

  // Even-n-only support: rotation by pi is invisible, (-1)^n = 1.
  StateVector even;
  even.n_min = -4;
  even.n_max = 4;
  even.amplitudes.assign(9, cplx(0.0, 0.0));
  even.at(-4) = 0.2;
  even.at(-2) = 0.4;
  even.at(0) = 0.6;
  even.at(2) = 0.5;
  even.at(4) = 0.3;
  const double inv = 1.0 / std::sqrt(even.norm_sq());
  for (auto& a : even.amplitudes) a *= inv;
  CHECK(fidelity(even, rotate(even, c::pi)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("revival_time: laboratory numbers and scaling") {
  const double t_lab = revival_time(c::electron_mass, 1e-6);
  CHECK(t_lab > 1.05e-7);
  CHECK(t_lab < 1.12e-7);
  CHECK(revival_time(c::electron_mass, 2e-6) ==
        doctest::Approx(4.0 * t_lab).epsilon(1e-12));
  CHECK(revival_time(c::electron_mass, 3e-10) ==
        doctest::Approx(9.77e-15).epsilon(1e-3));
  CHECK_THROWS_AS(revival_time(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("flux_to_alpha: half quantum maps to alpha = 1/2") {
  const double h_over_2e = c::planck_h / (2.0 * c::elementary_charge);
  CHECK(h_over_2e == doctest::Approx(2.0678e-15).epsilon(1e-4));
  CHECK(flux_to_alpha(h_over_2e) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(flux_to_alpha(0.0) == 0.0);
  CHECK(flux_to_alpha(c::planck_h / c::elementary_charge) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(alpha_to_flux(flux_to_alpha(3.7e-15)) == doctest::Approx(3.7e-15).epsilon(1e-12));
}

TEST_CASE("property: unitarity under random evolution") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector psi = testutil::random_state(rng);
    const StateVector out = evolve(psi, 10.0 * unif(rng), 2.0 * unif(rng) - 1.0);
    CHECK(out.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("property: AB shift identity evolve(psi,1,alpha) == rotate(psi,4 pi alpha)") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector psi = testutil::random_state(rng);
    const double alpha = unif(rng);
    const double f = fidelity(evolve(psi, 1.0, alpha), rotate(psi, 2.0 * c::two_pi * alpha));
    CHECK(f >= 1.0 - 1e-12);
  }
}

TEST_CASE("property: flux observable only mod 1/2 at tau = 1") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unif(0.0, 0.5);
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector psi = testutil::random_state(rng, 20);
    const double alpha = unif(rng);
    const AngularDensity a = position_density(evolve(psi, 1.0, alpha), 512);
    const AngularDensity b = position_density(evolve(psi, 1.0, alpha + 0.5), 512);
    for (int k = 0; k < a.grid_size; ++k)
      CHECK(a.values[size_t(k)] == doctest::Approx(b.values[size_t(k)]).epsilon(1e-12));
  }
}

TEST_CASE("property: half revival is a pi rotation") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = testutil::random_state(rng);
    CHECK(fidelity(evolve(psi, 0.5, 0.0), rotate(psi, c::pi)) >= 1.0 - 1e-12);
  }
}

TEST_CASE("property: tau = 1 density independent of integer mean level") {
  const double alpha = 0.17;
  const AngularDensity base =
      position_density(evolve(make_gaussian_packet({8.0, 0, 0.9, 0}), 1.0, alpha), 1024);
  for (int n0 : {1, 4, -3}) {
    const AngularDensity d = position_density(
        evolve(make_gaussian_packet({8.0, n0, 0.9, 0}), 1.0, alpha), 1024);
    for (int k = 0; k < d.grid_size; ++k)
      CHECK(d.values[size_t(k)] == doctest::Approx(base.values[size_t(k)]).epsilon(1e-10));
  }
}

TEST_CASE("property: evolution composes in tau") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = testutil::random_state(rng);
    const double t1 = unif(rng), t2 = unif(rng), alpha = unif(rng);
    const double f =
        fidelity(evolve(evolve(psi, t1, alpha), t2, alpha), evolve(psi, t1 + t2, alpha));
    CHECK(f >= 1.0 - 1e-12);
  }
}

TEST_CASE("ring config validation") {
  CHECK_THROWS_AS(validate(RingConfig{-1.0, 1e-6, 0.0, false}), std::invalid_argument);
  CHECK_THROWS_AS(validate(RingConfig{c::electron_mass, 0.0, 0.0, false}),
                  std::invalid_argument);
  CHECK_NOTHROW(validate(RingConfig{c::electron_mass, 1e-6, 0.3, false}));
}
