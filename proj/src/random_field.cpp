#include "ns2d/random_field.hpp"

#include <cmath>
#include <random>

#include "ns2d/norms.hpp"

namespace ns2d {

SpectralField random_initial_field(std::uint64_t seed, Grid grid, double spectrum_slope,
                                   double amplitude) {
    if (amplitude < 0.0)
        throw std::invalid_argument("random_initial_field: amplitude must be >= 0");
    SpectralField f(grid);
    if (amplitude == 0.0) return f;

    std::mt19937_64 rng(seed);
    // Phases from raw 53-bit draws rather than a distribution object, so the
    // stream is pinned independently of the standard library.
    const auto phase = [&rng]() {
        return kTwoPi * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };

    const int cap = grid.n / 3;
    // Half plane k > 0, plus the k = 0, l > 0 ray; mirrors fixed by symmetry.
    for (int k = 0; k <= cap; ++k) {
        for (int l = -cap; l <= cap; ++l) {
            if (k == 0 && l <= 0) continue;
            const double kappa = std::sqrt(double(k) * k + double(l) * l);
            if (kappa > cap) continue;
            const double mag = std::pow(kappa, spectrum_slope);
            const double th = phase();
            const Complex c = mag * Complex(std::cos(th), std::sin(th));
            f.at(k, l) = c;
            f.at(-k, -l) = std::conj(c);
        }
    }
    f.zero_mean();
    const double norm = sobolev_norm(f, 0.0);
    if (norm > 0.0) f *= amplitude / norm;
    return f;
}

} // namespace ns2d
