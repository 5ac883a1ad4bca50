#pragma once

#include <functional>
#include <memory>

#include "ns2d/spectral_field.hpp"

namespace ns2d {

/// Exact solution used by the temporal order studies:
///   omega_e(t) = e^{-t} (sin x sin y + 1/2 sin 2x sin y),
/// with forcing f = d/dt omega_e + perp_grad(psi_e) . grad(omega_e)
///               - nu laplacian(omega_e)
/// assembled once as f(t) = e^{-t} A + e^{-2t} B (A carries the linear terms,
/// B the time-independent Jacobian of the shape).
class ManufacturedSolution {
public:
    ManufacturedSolution(Grid grid, double nu);

    SpectralField exact(double t) const;
    SpectralField forcing(double t) const;
    const Grid& grid() const { return grid_; }
    const SpectralField& linear_part() const { return linear_part_; }
    const SpectralField& jacobian_part() const { return jacobian_part_; }

private:
    Grid grid_;
    SpectralField shape_;
    SpectralField linear_part_;   // -shape - nu * laplacian(shape)
    SpectralField jacobian_part_; // perp_grad(psi_shape) . grad(shape)
};

enum class ForcingKind { Zero, Steady, TimeDependent, Manufactured };

/// External body forcing for the vorticity equation. Every produced field is
/// mean zero. The stepper evaluates it at t_{n+1} = (n+1)k.
class ForcingSpec {
public:
    ForcingSpec() : kind_(ForcingKind::Zero) {}

    static ForcingSpec zero();
    static ForcingSpec steady(SpectralField f);
    static ForcingSpec time_dependent(std::function<SpectralField(double)> fn);
    static ForcingSpec manufactured(Grid grid, double nu);

    ForcingKind kind() const { return kind_; }
    bool is_steady() const { return kind_ == ForcingKind::Zero || kind_ == ForcingKind::Steady; }

    /// f(t) on the given grid (Zero yields a zero field of that grid).
    SpectralField evaluate(double t, Grid grid) const;

    /// sup_t ||f(t)||_{H^-1} where cheaply available: exact for Zero/Steady,
    /// a triangle-inequality bound for Manufactured, and NaN for general
    /// time-dependent callbacks (callers supply their own bound).
    double h_minus1_sup(Grid grid) const;

    const ManufacturedSolution* manufactured_solution() const {
        return manufactured_ ? manufactured_.get() : nullptr;
    }

private:
    ForcingKind kind_;
    SpectralField steady_;
    std::function<SpectralField(double)> callback_;
    std::shared_ptr<const ManufacturedSolution> manufactured_;
};

} // namespace ns2d
