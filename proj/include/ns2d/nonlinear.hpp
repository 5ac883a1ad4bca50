#pragma once

#include <vector>

#include "ns2d/fft.hpp"
#include "ns2d/spectral_field.hpp"

namespace ns2d {

/// Reusable buffers + transforms for evaluating the advection nonlinearity.
/// One instance per thread (the free functions below use a thread-local one);
/// the time stepper owns its own.
class AdvectionKernel {
public:
    explicit AdvectionKernel(Grid grid);

    Grid grid() const { return grid_; }
    int padded_extent() const { return pad_m_; }

    /// Dealiased Galerkin advection P_N(perp_grad(psi) . grad(omega)):
    /// derivatives in spectral space, pointwise products on the zero-padded
    /// 3N/2 grid, transform back, truncate, zero the mean. Equals the exact
    /// Galerkin projection of the product of the two trig polynomials.
    void galerkin(const Complex* psi, const Complex* omega, Complex* out);

    /// Temam's skew-symmetric collocation form
    ///   1/2 ( u . grad_N omega + div_N(u omega) ),  u = perp_grad_N psi,
    /// with pointwise products on the N grid itself -- aliasing retained by
    /// design; the skew split supplies the discrete orthogonality instead.
    void collocation_skew(const Complex* psi, const Complex* omega, Complex* out);

    /// Dealiased pointwise product P_N(f g) (mean kept as computed).
    void product_dealiased(const Complex* f, const Complex* g, Complex* out);

    /// perp_grad(psi) . grad(phi) via the dealiased product; mean zeroed.
    void jacobian(const Complex* psi, const Complex* phi, Complex* out);

private:
    void derivative_into(const Complex* src, int axis, double sign);

    Grid grid_;
    int pad_m_;
    std::vector<Complex> spec_a_, spec_b_;
    AlignedReal ra_, rb_, rc_, racc_;
};

SpectralField advect_galerkin(const SpectralField& psi, const SpectralField& omega);
SpectralField advect_collocation_skew(const SpectralField& psi, const SpectralField& omega);

/// b(psi, phi, vphi) = integral of (perp_grad(psi) . grad(phi)) vphi.
/// Products dealiased, so this is the exact integral for trig-polynomial
/// inputs; skew-symmetric in the last two arguments.
double trilinear_b(const SpectralField& psi, const SpectralField& phi,
                   const SpectralField& vphi);

/// The five bilinear estimates controlling perp_grad(psi) . grad(phi).
/// Naming: result norm _ psi norm, phi norm.
enum class WenteVariant { Hm1_H1H1, Hm1_H2L2, L2_H2H1, L2_H1H2, H1_H2H2 };

/// Ratio LHS-norm(perp_grad(psi) . grad(phi)) / (RHS norm product) for the
/// chosen inequality; suprema over samples estimate the constant empirically.
/// Throws std::invalid_argument when a denominator norm vanishes.
double wente_ratio(const SpectralField& psi, const SpectralField& phi,
                   WenteVariant variant);

const char* wente_variant_name(WenteVariant v);

} // namespace ns2d
