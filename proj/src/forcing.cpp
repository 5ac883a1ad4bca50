#include "ns2d/forcing.hpp"

#include <cmath>

#include "ns2d/nonlinear.hpp"
#include "ns2d/norms.hpp"
#include "ns2d/operators.hpp"

namespace ns2d {

ManufacturedSolution::ManufacturedSolution(Grid grid, double nu) : grid_(grid) {
    // sin x sin y = -1/4 e^{i(x+y)} + 1/4 e^{i(x-y)} + c.c.
    // 1/2 sin 2x sin y scales the same pattern at (2, +-1).
    shape_ = SpectralField::from_modes(grid, {
        {1, 1, Complex(-0.25, 0.0)},
        {1, -1, Complex(0.25, 0.0)},
        {2, 1, Complex(-0.125, 0.0)},
        {2, -1, Complex(0.125, 0.0)},
    });
    SpectralField lap = laplacian(shape_);
    linear_part_ = SpectralField(grid);
    linear_part_ -= shape_;
    lap *= nu;
    linear_part_ -= lap;
    const SpectralField psi = inverse_laplacian(shape_);
    jacobian_part_ = advect_galerkin(psi, shape_);
}

SpectralField ManufacturedSolution::exact(double t) const {
    SpectralField f = shape_;
    f *= std::exp(-t);
    return f;
}

SpectralField ManufacturedSolution::forcing(double t) const {
    SpectralField f = linear_part_;
    f *= std::exp(-t);
    SpectralField j = jacobian_part_;
    j *= std::exp(-2.0 * t);
    f += j;
    return f;
}

ForcingSpec ForcingSpec::zero() { return ForcingSpec(); }

ForcingSpec ForcingSpec::steady(SpectralField f) {
    ForcingSpec spec;
    spec.kind_ = ForcingKind::Steady;
    f.zero_mean();
    spec.steady_ = std::move(f);
    return spec;
}

ForcingSpec ForcingSpec::time_dependent(std::function<SpectralField(double)> fn) {
    ForcingSpec spec;
    spec.kind_ = ForcingKind::TimeDependent;
    spec.callback_ = std::move(fn);
    return spec;
}

ForcingSpec ForcingSpec::manufactured(Grid grid, double nu) {
    ForcingSpec spec;
    spec.kind_ = ForcingKind::Manufactured;
    spec.manufactured_ = std::make_shared<ManufacturedSolution>(grid, nu);
    return spec;
}

SpectralField ForcingSpec::evaluate(double t, Grid grid) const {
    switch (kind_) {
        case ForcingKind::Zero:
            return SpectralField(grid);
        case ForcingKind::Steady:
            if (!(steady_.grid() == grid)) throw SizeError("forcing grid mismatch");
            return steady_;
        case ForcingKind::TimeDependent: {
            SpectralField f = callback_(t);
            if (!(f.grid() == grid)) throw SizeError("forcing grid mismatch");
            f.zero_mean();
            return f;
        }
        case ForcingKind::Manufactured:
            if (!(manufactured_->grid() == grid)) throw SizeError("forcing grid mismatch");
            return manufactured_->forcing(t);
    }
    throw std::logic_error("unreachable");
}

double ForcingSpec::h_minus1_sup(Grid grid) const {
    switch (kind_) {
        case ForcingKind::Zero:
            return 0.0;
        case ForcingKind::Steady:
            return sobolev_norm(steady_, -1.0);
        case ForcingKind::Manufactured:
            // ||f(t)|| <= e^{-t}||A|| + e^{-2t}||B||, maximized at t = 0.
            return sobolev_norm(manufactured_->linear_part(), -1.0) +
                   sobolev_norm(manufactured_->jacobian_part(), -1.0);
        case ForcingKind::TimeDependent:
            return std::nan("");
    }
    throw std::logic_error("unreachable");
}

} // namespace ns2d
