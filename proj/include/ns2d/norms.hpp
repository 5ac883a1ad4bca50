#pragma once

#include "ns2d/spectral_field.hpp"

namespace ns2d {

/// Continuum-normalized Sobolev (semi-)norm of a mean-zero field:
///   ( sum_{kappa != 0} |kappa|^{2s} |fhat|^2 )^{1/2} * 2pi,
/// so s = 0 reproduces sqrt(integral of f^2) and the analytic values of
/// test integrands. Negative s gives the dual norms.
double sobolev_norm(const SpectralField& f, double s);

/// L2 inner product integral over the box, evaluated spectrally.
double l2_inner(const SpectralField& f, const SpectralField& g);

/// Same but with the |kappa|^{2s} weight (s=1 pairs gradients).
double sobolev_inner(const SpectralField& f, const SpectralField& g, double s);

/// Physical-space discrete inner product h^2 * sum f_ij g_ij. Agrees with
/// l2_inner by the Parseval identity; kept separate so tests can check that.
double quadrature_inner(const std::vector<double>& f, const std::vector<double>& g,
                        Grid grid);

/// The 2x2 weight [[1/2, -1], [-1, 5/2 + mu/2]] behind the generalized
/// G-stability of the two-step method. Positive definite for all mu >= 0.
struct GWeight {
    double mu = 0.0;

    explicit GWeight(double mu_value);

    double a() const { return 0.5; }
    double b() const { return -1.0; }
    double d() const { return 2.5 + 0.5 * mu; }

    /// Pointwise quadratic form [v0 v1] G [v0 v1]^T.
    double quadratic_form(double v0, double v1) const {
        return a() * v0 * v0 + 2.0 * b() * v0 * v1 + d() * v1 * v1;
    }

    double eigenvalue_min() const;
    double eigenvalue_max() const;
};

/// || V ||^2_{G(mu)} = 1/2 ||v0||^2 - 2 (v0, v1) + (5/2 + mu/2) ||v1||^2,
/// computed in one spectral pass. Grids must match.
double g_norm_sq(const StatePair& pair, const GWeight& g);

/// Norm-equivalence constants on [0, mu_max] (mu_max in [0,1]):
///   C_l ||V||^2_{G(mu)} <= ||V||^2_{L2} <= C_u ||V||^2_{G(mu)}.
/// C_u = 1/lambda_min(G(0)) and C_l = 1/lambda_max(G(mu_max)), from the
/// closed-form 2x2 eigenvalues.
struct EquivalenceConstants {
    double c_lower;
    double c_upper;
};
EquivalenceConstants g_equivalence_constants(double mu_max);

/// LHS - RHS of the G-stability identity
///   integral[(3/2 v2 - 2 v1 + 1/2 v0) v2 + mu/2 v2^2]
///     = 1/2 (||V1||^2_G - (1+mu)^{-1} ||V0||^2_G)
///       + ||(1+mu) v2 - 2 v1 + v0||^2 / (4(1+mu))
/// with V0 = [v0,v1], V1 = [v1,v2]. Algebraically zero; anything beyond
/// roundoff indicates an implementation bug.
double g_identity_residual(const SpectralField& v0, const SpectralField& v1,
                           const SpectralField& v2, double mu);

/// Magnitude scale of the identity's two sides, for relative comparisons.
double g_identity_scale(const SpectralField& v0, const SpectralField& v1,
                        const SpectralField& v2, double mu);

} // namespace ns2d
