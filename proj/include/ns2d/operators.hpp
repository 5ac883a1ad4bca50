#pragma once

#include <utility>
#include <vector>

#include "ns2d/spectral_field.hpp"

namespace ns2d {

/// Discrete Fourier expansion of N x N real samples (row-major, x slow).
/// All N^2 bins are kept, so inverse_transform(forward_transform(v)) == v to
/// roundoff; the (0,0) coefficient equals the grid mean (zero it yourself if
/// you need a solver field).
SpectralField forward_transform(const std::vector<double>& values, Grid grid);

/// Grid samples of the trigonometric interpolant. Throws SymmetryError if the
/// coefficients are not Hermitian-symmetric to ~1e-13 of the field amplitude
/// (the imaginary residue of the inverse transform is the witness).
std::vector<double> inverse_transform(const SpectralField& field);

// Exact spectral derivatives: multiply by ik (resp. il); Nyquist bins are
// zeroed so the derivative of a real field is real, and the mean is zeroed.
SpectralField derivative_x(const SpectralField& f);
SpectralField derivative_y(const SpectralField& f);

/// Multiplies each coefficient by -(k^2 + l^2). Nyquist bins zeroed.
SpectralField laplacian(const SpectralField& f);

/// Solves -laplacian(psi) = omega exactly per mode: psihat = omegahat/|kappa|^2.
/// Requires a mean-zero input (throws MeanZeroError beyond 1e-12 of amplitude).
SpectralField inverse_laplacian(const SpectralField& omega);

/// Divergence-free velocity (-d psi/dy, d psi/dx).
std::pair<SpectralField, SpectralField> perp_gradient(const SpectralField& psi);

/// Projection P_M: zeroes every coefficient with max(|k|,|l|) > M. Idempotent.
SpectralField truncate_modes(const SpectralField& f, int max_mode);

} // namespace ns2d
