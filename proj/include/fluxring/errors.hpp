#pragma once

#include <stdexcept>

namespace fluxring {

// Parameters outside the documented numerical envelope (undersized grids,
// step sizes beyond the stability range, ...).
struct EnvelopeError : std::domain_error {
  using std::domain_error::domain_error;
};

// peak_angle: circular resultant too small to define a direction.
struct UniformDensityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// peak_angle: a secondary lobe carries too much mass for a single-peak read.
struct MultiModalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// fractional_lobes: packet too wide for the requested lobe spacing.
struct OverlapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear solver failed to reach its residual target.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fluxring
