#pragma once

#include <complex>
#include <vector>

#include "ns2d/errors.hpp"
#include "ns2d/grid.hpp"

namespace ns2d {

using Complex = std::complex<double>;

/// Real-valued periodic scalar field on (0,2pi)^2 stored as Fourier
/// coefficients in the expansion convention
///     f(x,y) = sum_{k,l} fhat(k,l) exp(i(kx+ly)).
///
/// Storage is the full N x N complex spectrum in FFT bin order (wavenumbers
/// 0..N/2-1, -N/2..-1 per direction); the -N/2 bin holds the shared Nyquist
/// coefficient. Fields representing real data satisfy
/// fhat(-k,-l) = conj(fhat(k,l)).
///
/// Solver-facing fields are mean zero: the (0,0) coefficient is exactly 0.
/// forward_transform() preserves the grid mean, so callers that want a field
/// invariant call zero_mean() (factories here do it for you).
class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(Grid grid)
        : grid_(grid), coeffs_(static_cast<size_t>(grid.size())) {}

    SpectralField(Grid grid, std::vector<Complex> coeffs)
        : grid_(grid), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != static_cast<size_t>(grid_.size()))
            throw SizeError("SpectralField: coefficient count does not match grid");
    }

    /// Builds a mean-zero field from a list of (k, l, coefficient) triples,
    /// mirroring each entry Hermitian-symmetrically so the field is real.
    static SpectralField from_modes(
        Grid grid, const std::vector<std::tuple<int, int, Complex>>& modes);

    const Grid& grid() const { return grid_; }
    int n() const { return grid_.n; }

    Complex* data() { return coeffs_.data(); }
    const Complex* data() const { return coeffs_.data(); }
    size_t size() const { return coeffs_.size(); }

    /// Coefficient at signed wavenumbers k, l in [-N/2, N/2).
    Complex& at(int k, int l) {
        return coeffs_[static_cast<size_t>(grid_.index_of(k)) * grid_.n + grid_.index_of(l)];
    }
    Complex at(int k, int l) const {
        return coeffs_[static_cast<size_t>(grid_.index_of(k)) * grid_.n + grid_.index_of(l)];
    }

    Complex& bin(int a, int b) { return coeffs_[static_cast<size_t>(a) * grid_.n + b]; }
    Complex bin(int a, int b) const { return coeffs_[static_cast<size_t>(a) * grid_.n + b]; }

    void zero_mean() { coeffs_[0] = Complex(0.0, 0.0); }
    Complex mean_coefficient() const { return coeffs_[0]; }

    /// Zeroes the |k| = N/2 rows/columns. Differentiation operators call this
    /// so derivatives of real fields stay real.
    void zero_nyquist();

    /// Max |fhat(-k,-l) - conj(fhat(k,l))| over all modes.
    double hermitian_defect() const;

    /// Replaces the spectrum by its Hermitian-symmetric part (exact for
    /// already-symmetric data up to the averaging arithmetic).
    void symmetrize();

    double max_abs_coefficient() const;

    // Elementwise vector-space arithmetic; grids must match.
    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

    bool same_grid(const SpectralField& o) const { return grid_ == o.grid_; }

private:
    Grid grid_;
    std::vector<Complex> coeffs_;
};

/// Two consecutive vorticity levels: the state of the product-space map
/// S_k [w^n, w^{n+1}]. `older` is w^n (or the pair's first coordinate),
/// `newer` is w^{n+1}.
struct StatePair {
    SpectralField older;
    SpectralField newer;

    StatePair() = default;
    StatePair(SpectralField o, SpectralField n) : older(std::move(o)), newer(std::move(n)) {
        if (!older.same_grid(newer))
            throw SizeError("StatePair: components must share one grid");
    }
};

} // namespace ns2d
