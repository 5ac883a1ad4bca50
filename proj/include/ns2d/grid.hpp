#pragma once

#include <stdexcept>

namespace ns2d {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Uniform N x N collocation grid on the periodic box (0,2pi)^2.
/// N must be even so the Nyquist rows are well defined; spacing is h = 2pi/N.
struct Grid {
    int n = 0;

    Grid() = default;
    explicit Grid(int n_modes) : n(n_modes) {
        if (n < 4 || n % 2 != 0)
            throw std::invalid_argument("Grid: N must be even and >= 4");
    }

    double spacing() const { return kTwoPi / n; }
    int nyquist() const { return n / 2; }
    int size() const { return n * n; }

    /// Signed wavenumber for storage index a in [0,N): 0..N/2-1, then -N/2..-1.
    int wavenumber(int a) const { return a < n / 2 ? a : a - n; }
    /// Storage index for signed wavenumber in [-N/2, N/2).
    int index_of(int k) const { return k >= 0 ? k : k + n; }

    bool operator==(const Grid&) const = default;
};

} // namespace ns2d
