#pragma once

// CODATA 2018 SI values (exact where the SI defines them so).
namespace fluxring::constants {

inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double planck_h = 6.62607015e-34;         // J s (exact)
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double light_speed = 299792458.0;         // m/s (exact)

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace fluxring::constants
