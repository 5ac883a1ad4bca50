#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ns2d/spectral_field.hpp"
#include "ns2d/statistics.hpp"

namespace ns2d {

/// Radius of the absorbing ball: rho0 = 2 |f|_inf / nu with |f|_inf the
/// sup-in-time H^-1 norm of the forcing.
double rho0(double f_inf_hminus1, double nu);

/// Decay envelope for ||V_n||^2_{G(nu k)}:
///   (1 + nu k)^{-n} V0_gsq + rho0^2 (1 - (1 + nu k)^{-n}),
/// monotone from the initial value toward rho0^2.
double l2_envelope(long long n, double nu, double k, double v0_gsq, double rho0_value);

/// Upper bound on the time to enter {||V||^2_G <= 2 rho0^2}:
/// max(0, (4/nu) ln(||V0||_G(nu) / rho0)).
double absorbing_time(double v0_gnorm, double rho0_value, double nu);

/// Two-step discrete Gronwall bound. For any nonnegative sequence with
///   g^{n+1} <= [lambda g^n + (1-lambda) g^{n-1} + beta eps] / (1+eps),
/// and gamma = (1 + eps/2)/(1 + eps), the n+1-st term (n >= 2) is bounded by
///   gamma * max{ gamma^floor((n-1)/2) g2, gamma^floor((n-1)/2) g1, 2 beta }.
/// lambda does not appear in the bound; it is accepted (and validated) because
/// the hypothesis needs it.
double gronwall_two_step_bound(double g1, double g2, double eps, double beta,
                               double lambda, long long n);

/// (||w^{n+1} - w^n||, sqrt(k) ||grad(w^{n+1} - w^n)||): the two halves of
/// the attractor consistency estimate, which are O(k) on the attractor.
std::pair<double, double> consistency_gap(const StatePair& pair, double k);

/// Time average of nu ||grad w||^2 - (f, w) over a post-transient window,
/// with a block-bootstrap confidence interval. Stationarity demands this
/// be <= 0 up to O(k) and sampling error.
struct EnergyBalanceResult {
    double mean = 0.0;
    BootstrapCI ci;
};
EnergyBalanceResult energy_balance_residual(const std::vector<double>& balance_series,
                                            std::uint64_t seed = 2024);

} // namespace ns2d
