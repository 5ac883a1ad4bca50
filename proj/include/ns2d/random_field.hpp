#pragma once

#include <cstdint>

#include "ns2d/spectral_field.hpp"

namespace ns2d {

/// Isotropic random mean-zero field: |what(kappa)| proportional to
/// kappa^slope for 0 < kappa <= N/3, phases drawn from the seeded generator
/// (bit-reproducible across runs), Hermitian symmetry by construction, and
/// the result rescaled to the requested L2 norm. amplitude 0 gives the zero
/// field.
SpectralField random_initial_field(std::uint64_t seed, Grid grid, double spectrum_slope,
                                   double amplitude);

} // namespace ns2d
