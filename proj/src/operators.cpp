#include "ns2d/operators.hpp"

#include <algorithm>
#include <cmath>

#include "ns2d/fft.hpp"

namespace ns2d {

SpectralField forward_transform(const std::vector<double>& values, Grid grid) {
    if (values.size() != static_cast<size_t>(grid.size()))
        throw SizeError("forward_transform: expected N*N samples");
    std::vector<Complex> grid_c(values.size());
    for (size_t i = 0; i < values.size(); ++i) grid_c[i] = Complex(values[i], 0.0);
    SpectralField f(grid);
    workspace_for(grid.n).forward_c2c(grid_c.data(), f.data());
    return f;
}

std::vector<double> inverse_transform(const SpectralField& field) {
    const int n = field.n();
    std::vector<Complex> grid_c(field.size());
    workspace_for(n).inverse_c2c(field.data(), grid_c.data());
    double max_re = 0.0, max_im = 0.0;
    for (const Complex& c : grid_c) {
        max_re = std::max(max_re, std::abs(c.real()));
        max_im = std::max(max_im, std::abs(c.imag()));
    }
    if (max_im > 1e-13 * std::max(max_re, 1e-300) && max_im > 1e-300)
        throw SymmetryError("inverse_transform: coefficients are not Hermitian-symmetric");
    std::vector<double> out(field.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = grid_c[i].real();
    return out;
}

SpectralField derivative_x(const SpectralField& f) {
    const int n = f.n();
    SpectralField out(f.grid());
    for (int a = 0; a < n; ++a) {
        const double k = f.grid().wavenumber(a);
        for (int b = 0; b < n; ++b)
            out.bin(a, b) = Complex(0.0, k) * f.bin(a, b);
    }
    out.zero_nyquist();
    out.zero_mean();
    return out;
}

SpectralField derivative_y(const SpectralField& f) {
    const int n = f.n();
    SpectralField out(f.grid());
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const double l = f.grid().wavenumber(b);
            out.bin(a, b) = Complex(0.0, l) * f.bin(a, b);
        }
    }
    out.zero_nyquist();
    out.zero_mean();
    return out;
}

SpectralField laplacian(const SpectralField& f) {
    const int n = f.n();
    SpectralField out(f.grid());
    for (int a = 0; a < n; ++a) {
        const double k = f.grid().wavenumber(a);
        for (int b = 0; b < n; ++b) {
            const double l = f.grid().wavenumber(b);
            out.bin(a, b) = -(k * k + l * l) * f.bin(a, b);
        }
    }
    out.zero_nyquist();
    out.zero_mean();
    return out;
}

SpectralField inverse_laplacian(const SpectralField& omega) {
    const double mean_mag = std::abs(omega.mean_coefficient());
    if (mean_mag > 1e-12 * std::max(omega.max_abs_coefficient(), 1e-300))
        throw MeanZeroError("inverse_laplacian: input must be mean zero");
    const int n = omega.n();
    SpectralField out(omega.grid());
    for (int a = 0; a < n; ++a) {
        const double k = omega.grid().wavenumber(a);
        for (int b = 0; b < n; ++b) {
            const double l = omega.grid().wavenumber(b);
            const double k2 = k * k + l * l;
            out.bin(a, b) = k2 > 0.0 ? omega.bin(a, b) / k2 : Complex(0.0, 0.0);
        }
    }
    return out;
}

std::pair<SpectralField, SpectralField> perp_gradient(const SpectralField& psi) {
    SpectralField u = derivative_y(psi);
    u *= -1.0;
    return {std::move(u), derivative_x(psi)};
}

SpectralField truncate_modes(const SpectralField& f, int max_mode) {
    if (max_mode < 0 || max_mode > f.grid().nyquist())
        throw std::invalid_argument("truncate_modes: M must be in [0, N/2]");
    const int n = f.n();
    SpectralField out(f.grid());
    for (int a = 0; a < n; ++a) {
        const int k = f.grid().wavenumber(a);
        for (int b = 0; b < n; ++b) {
            const int l = f.grid().wavenumber(b);
            out.bin(a, b) = (std::max(std::abs(k), std::abs(l)) <= max_mode)
                                ? f.bin(a, b)
                                : Complex(0.0, 0.0);
        }
    }
    return out;
}

} // namespace ns2d
