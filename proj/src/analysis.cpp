#include "ns2d/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "ns2d/norms.hpp"

namespace ns2d {

double rho0(double f_inf_hminus1, double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("rho0: nu must be positive");
    if (f_inf_hminus1 < 0.0) throw std::invalid_argument("rho0: |f| must be nonnegative");
    return 2.0 * f_inf_hminus1 / nu;
}

double l2_envelope(long long n, double nu, double k, double v0_gsq, double rho0_value) {
    if (n < 0) throw std::invalid_argument("l2_envelope: n must be nonnegative");
    if (!(nu > 0.0) || !(k > 0.0))
        throw std::invalid_argument("l2_envelope: nu, k must be positive");
    if (nu * k > 1.0) throw std::invalid_argument("l2_envelope: requires nu k <= 1");
    const double decay = std::pow(1.0 + nu * k, -static_cast<double>(n));
    return decay * v0_gsq + rho0_value * rho0_value * (1.0 - decay);
}

double absorbing_time(double v0_gnorm, double rho0_value, double nu) {
    if (!(v0_gnorm > 0.0) || !(rho0_value > 0.0) || !(nu > 0.0))
        throw std::invalid_argument("absorbing_time: inputs must be positive");
    return std::max(0.0, 4.0 / nu * std::log(v0_gnorm / rho0_value));
}

double gronwall_two_step_bound(double g1, double g2, double eps, double beta,
                               double lambda, long long n) {
    if (!(eps > 0.0)) throw std::invalid_argument("gronwall: eps must be positive");
    if (!(beta > 0.0)) throw std::invalid_argument("gronwall: beta must be positive");
    if (!(lambda > 0.0) || !(lambda < 1.0))
        throw std::invalid_argument("gronwall: lambda must be in (0,1)");
    if (g1 < 0.0 || g2 < 0.0)
        throw std::invalid_argument("gronwall: sequence values must be nonnegative");
    if (n < 2) throw std::invalid_argument("gronwall: n must be >= 2");
    const double gamma = (1.0 + 0.5 * eps) / (1.0 + eps);
    const double decay = std::pow(gamma, static_cast<double>((n - 1) / 2));
    return gamma * std::max({decay * g2, decay * g1, 2.0 * beta});
}

std::pair<double, double> consistency_gap(const StatePair& pair, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("consistency_gap: k must be positive");
    SpectralField diff = pair.newer;
    diff -= pair.older;
    return {sobolev_norm(diff, 0.0), std::sqrt(k) * sobolev_norm(diff, 1.0)};
}

EnergyBalanceResult energy_balance_residual(const std::vector<double>& balance_series,
                                            std::uint64_t seed) {
    EnergyBalanceResult r;
    r.ci = block_bootstrap_ci(balance_series, 400, seed);
    r.mean = r.ci.mean;
    return r;
}

} // namespace ns2d
