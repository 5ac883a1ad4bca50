#include "ns2d/spectral_field.hpp"

#include <algorithm>
#include <cmath>

namespace ns2d {

SpectralField SpectralField::from_modes(
    Grid grid, const std::vector<std::tuple<int, int, Complex>>& modes) {
    SpectralField f(grid);
    for (const auto& [k, l, c] : modes) {
        if (std::abs(k) >= grid.nyquist() || std::abs(l) >= grid.nyquist())
            throw SizeError("from_modes: wavenumber outside (-N/2, N/2)");
        f.at(k, l) += c;
        f.at(-k, -l) += std::conj(c);
    }
    // Self-conjugate entries (k,l)=(-k,-l) got both halves; from_modes treats
    // the argument as "the coefficient", so halve the double count.
    f.at(0, 0) *= 0.5;
    f.zero_mean();
    return f;
}

void SpectralField::zero_nyquist() {
    const int n = grid_.n;
    const int ny = n / 2;
    for (int b = 0; b < n; ++b) bin(ny, b) = Complex(0.0, 0.0);
    for (int a = 0; a < n; ++a) bin(a, ny) = Complex(0.0, 0.0);
}

double SpectralField::hermitian_defect() const {
    const int n = grid_.n;
    double worst = 0.0;
    for (int a = 0; a < n; ++a) {
        const int am = (n - a) % n;
        for (int b = 0; b < n; ++b) {
            const int bm = (n - b) % n;
            worst = std::max(worst, std::abs(bin(am, bm) - std::conj(bin(a, b))));
        }
    }
    return worst;
}

void SpectralField::symmetrize() {
    const int n = grid_.n;
    for (int a = 0; a < n; ++a) {
        const int am = (n - a) % n;
        for (int b = 0; b < n; ++b) {
            const int bm = (n - b) % n;
            if (a * n + b > am * n + bm) continue;
            const Complex avg = 0.5 * (bin(a, b) + std::conj(bin(am, bm)));
            bin(a, b) = avg;
            bin(am, bm) = std::conj(avg);
        }
    }
}

double SpectralField::max_abs_coefficient() const {
    double worst = 0.0;
    for (const Complex& c : coeffs_) worst = std::max(worst, std::abs(c));
    return worst;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    if (!same_grid(o)) throw SizeError("SpectralField: grid mismatch in +=");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    if (!same_grid(o)) throw SizeError("SpectralField: grid mismatch in -=");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (Complex& c : coeffs_) c *= s;
    return *this;
}

} // namespace ns2d
