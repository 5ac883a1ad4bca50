#include "ns2d/stepper.hpp"

#include <chrono>
#include <cmath>
#include <cstring>

#include "ns2d/errors.hpp"

namespace ns2d {

void SolverConfig::validate() const {
    if (!(nu > 0.0)) throw ConfigError("nu must be positive");
    if (!(k > 0.0)) throw ConfigError("k must be positive");
    if (grid.n < 8 || grid.n % 2 != 0) throw ConfigError("N must be even and >= 8");
    if (steps < 0) throw ConfigError("steps must be nonnegative");
    if (!(cw_estimate > 0.0)) throw ConfigError("cw_estimate must be positive");
    if (bootstrap == BootstrapMode::ExactIfKnown &&
        forcing.kind() != ForcingKind::Manufactured)
        throw ConfigError("bootstrap=exact requires the manufactured forcing");
}

double max_stable_timestep(double nu, double cw, double cu, double m0) {
    if (!(nu > 0.0) || !(cw > 0.0) || !(cu > 0.0) || !(m0 > 0.0))
        throw std::invalid_argument("max_stable_timestep: all inputs must be positive");
    return nu / (50.0 * cw * cw * cu * m0 * m0);
}

Stepper::Stepper(SolverConfig cfg) : cfg_(std::move(cfg)), kernel_(cfg_.grid) {
    cfg_.validate();
    const size_t nn = static_cast<size_t>(cfg_.grid.size());
    om_prev_.resize(nn);
    om_curr_.resize(nn);
    om_next_.resize(nn);
    extrap_.resize(nn);
    psi_.resize(nn);
    nl_.resize(nn);
    f_.resize(nn);
    if (cfg_.nonlinearity == Nonlinearity::ExtrapolatedGear) {
        nl_curr_.resize(nn);
        nl_prev_.resize(nn);
    }

    const int n = cfg_.grid.n;
    k2_.resize(nn);
    inv_k2_.resize(nn);
    inv_denom_.resize(nn);
    const double c0 = 3.0 / (2.0 * cfg_.k);
    for (int a = 0; a < n; ++a) {
        const double kx = cfg_.grid.wavenumber(a);
        for (int b = 0; b < n; ++b) {
            const double ky = cfg_.grid.wavenumber(b);
            const size_t i = static_cast<size_t>(a) * n + b;
            k2_[i] = kx * kx + ky * ky;
            inv_k2_[i] = k2_[i] > 0.0 ? 1.0 / k2_[i] : 0.0;
            // Zeroing the inverse on the mean and Nyquist bins keeps every
            // state in the mean-zero, derivative-safe subspace.
            const bool nyq = std::abs(kx) == n / 2 || std::abs(ky) == n / 2;
            inv_denom_[i] = (k2_[i] == 0.0 || nyq) ? 0.0 : 1.0 / (c0 + cfg_.nu * k2_[i]);
        }
    }
}

void Stepper::evaluate_forcing(double t) {
    if (cfg_.forcing.kind() == ForcingKind::Zero) {
        std::memset(f_.data(), 0, f_.size() * sizeof(Complex));
        return;
    }
    if (cfg_.forcing.is_steady() && started_) return; // already cached
    const SpectralField f = cfg_.forcing.evaluate(t, cfg_.grid);
    std::memcpy(f_.data(), f.data(), f_.size() * sizeof(Complex));
}

void Stepper::start(const SpectralField& omega0) {
    if (!(omega0.grid() == cfg_.grid)) throw SizeError("start: grid mismatch");
    const size_t nn = om_curr_.size();
    std::memcpy(om_prev_.data(), omega0.data(), nn * sizeof(Complex));
    om_prev_[0] = Complex(0.0, 0.0);

    evaluate_forcing(cfg_.k);

    if (cfg_.bootstrap == BootstrapMode::ExactIfKnown) {
        const SpectralField w1 = cfg_.forcing.manufactured_solution()->exact(cfg_.k);
        std::memcpy(om_curr_.data(), w1.data(), nn * sizeof(Complex));
    } else {
        // Semi-implicit Euler: (1/k - nu lap) w^1 = w^0/k - NL(psi^0, w^0) + f^1.
        // Locally O(k^2), so the global second order of the two-step scheme
        // survives the bootstrap.
        for (size_t i = 0; i < nn; ++i) psi_[i] = om_prev_[i] * inv_k2_[i];
        if (cfg_.nonlinearity == Nonlinearity::CollocationSkew)
            kernel_.collocation_skew(psi_.data(), om_prev_.data(), nl_.data());
        else
            kernel_.galerkin(psi_.data(), om_prev_.data(), nl_.data());
        const double inv_k = 1.0 / cfg_.k;
        for (size_t i = 0; i < nn; ++i) {
            const Complex rhs = om_prev_[i] * inv_k - nl_[i] + f_[i];
            // Same subspace policy as the main solve: dead bins stay zero.
            const double gate = inv_denom_[i] == 0.0 ? 0.0 : 1.0;
            om_curr_[i] = gate * rhs / (inv_k + cfg_.nu * k2_[i]);
        }
    }

    if (cfg_.nonlinearity == Nonlinearity::ExtrapolatedGear) {
        for (size_t i = 0; i < nn; ++i) psi_[i] = om_prev_[i] * inv_k2_[i];
        kernel_.galerkin(psi_.data(), om_prev_.data(), nl_prev_.data());
        for (size_t i = 0; i < nn; ++i) psi_[i] = om_curr_[i] * inv_k2_[i];
        kernel_.galerkin(psi_.data(), om_curr_.data(), nl_curr_.data());
    }

    pair_index_ = 0;
    started_ = true;
    refresh_moments();
}

void Stepper::resume(const StatePair& pair, long long pair_index) {
    if (!(pair.older.grid() == cfg_.grid)) throw SizeError("resume: grid mismatch");
    const size_t nn = om_curr_.size();
    std::memcpy(om_prev_.data(), pair.older.data(), nn * sizeof(Complex));
    std::memcpy(om_curr_.data(), pair.newer.data(), nn * sizeof(Complex));
    evaluate_forcing((pair_index + 1) * cfg_.k);
    if (cfg_.nonlinearity == Nonlinearity::ExtrapolatedGear) {
        for (size_t i = 0; i < nn; ++i) psi_[i] = om_prev_[i] * inv_k2_[i];
        kernel_.galerkin(psi_.data(), om_prev_.data(), nl_prev_.data());
        for (size_t i = 0; i < nn; ++i) psi_[i] = om_curr_[i] * inv_k2_[i];
        kernel_.galerkin(psi_.data(), om_curr_.data(), nl_curr_.data());
    }
    pair_index_ = pair_index;
    started_ = true;
    refresh_moments();
}

void Stepper::compute_nonlinearity() {
    const size_t nn = om_curr_.size();
    switch (cfg_.nonlinearity) {
        case Nonlinearity::GalerkinDealiased:
        case Nonlinearity::CollocationSkew: {
            // Advection at the extrapolated state (2 w^n - w^{n-1}).
            for (size_t i = 0; i < nn; ++i) {
                extrap_[i] = 2.0 * om_curr_[i] - om_prev_[i];
                psi_[i] = extrap_[i] * inv_k2_[i];
            }
            if (cfg_.nonlinearity == Nonlinearity::CollocationSkew)
                kernel_.collocation_skew(psi_.data(), extrap_.data(), nl_.data());
            else
                kernel_.galerkin(psi_.data(), extrap_.data(), nl_.data());
            break;
        }
        case Nonlinearity::ExtrapolatedGear: {
            // Classical linear-multistep form 2 NL(w^n) - NL(w^{n-1});
            // NL(w^n) was cached when w^n was newest.
            for (size_t i = 0; i < nn; ++i)
                nl_[i] = 2.0 * nl_curr_[i] - nl_prev_[i];
            break;
        }
    }
}

void Stepper::advance() {
    if (!started_) throw std::logic_error("Stepper::advance before start/resume");
    compute_nonlinearity();
    evaluate_forcing(time_next() + cfg_.k);
    solve_and_rotate();
}

void Stepper::solve_and_rotate() {
    const size_t nn = om_curr_.size();
    const double inv2k = 1.0 / (2.0 * cfg_.k);
    double sumsq = 0.0;
    for (size_t i = 0; i < nn; ++i) {
        const Complex rhs =
            (4.0 * om_curr_[i] - om_prev_[i]) * inv2k - nl_[i] + f_[i];
        om_next_[i] = rhs * inv_denom_[i];
        sumsq += std::norm(om_next_[i]);
    }
    const double l2 = kTwoPi * std::sqrt(sumsq);
    if (!(l2 <= cfg_.blowup_threshold))
        throw BlowupError("numerical blow-up detected", pair_index_ + 1);

    std::swap(om_prev_, om_curr_);
    std::swap(om_curr_, om_next_);
    ++pair_index_;

    if (cfg_.nonlinearity == Nonlinearity::ExtrapolatedGear) {
        std::swap(nl_prev_, nl_curr_);
        for (size_t i = 0; i < nn; ++i) psi_[i] = om_curr_[i] * inv_k2_[i];
        kernel_.galerkin(psi_.data(), om_curr_.data(), nl_curr_.data());
    }
    refresh_moments();
}

void Stepper::refresh_moments() {
    const size_t nn = om_curr_.size();
    StepMoments m;
    for (size_t i = 0; i < nn; ++i) {
        const double np = std::norm(om_prev_[i]);
        const double nc = std::norm(om_curr_[i]);
        const double cx = (om_prev_[i] * std::conj(om_curr_[i])).real();
        const double k2 = k2_[i];
        m.l2sq_prev += np;
        m.l2sq_next += nc;
        m.cross += cx;
        m.h1sq_prev += k2 * np;
        m.h1sq_next += k2 * nc;
        m.h2sq_next += k2 * k2 * nc;
        m.hm1sq_next += inv_k2_[i] * nc;
        const double gd = std::norm(om_curr_[i] - om_prev_[i]);
        m.gap_l2sq += gd;
        m.gap_h1sq += k2 * gd;
        m.cross_h1 += k2 * cx;
        m.f_inner_next += (f_[i] * std::conj(om_curr_[i])).real();
    }
    const double box = kTwoPi * kTwoPi;
    m.l2sq_prev *= box;
    m.l2sq_next *= box;
    m.cross *= box;
    m.h1sq_prev *= box;
    m.h1sq_next *= box;
    m.h2sq_next *= box;
    m.hm1sq_next *= box;
    m.gap_l2sq *= box;
    m.gap_h1sq *= box;
    m.cross_h1 *= box;
    m.f_inner_next *= box;
    moments_ = m;
}

StatePair Stepper::state() const {
    return StatePair(SpectralField(cfg_.grid, om_prev_), SpectralField(cfg_.grid, om_curr_));
}

SpectralField Stepper::newest() const { return SpectralField(cfg_.grid, om_curr_); }

RunReport run(const SolverConfig& cfg, const SpectralField& omega0,
              const std::vector<Monitor*>& monitors) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    if (cfg.steps == 0) {
        RunReport rep;
        rep.final_state = StatePair(omega0, omega0);
        return rep;
    }
    Stepper stepper(cfg);
    for (Monitor* m : monitors) m->on_start(cfg);
    stepper.start(omega0);
    StepView view{stepper.pair_index(), stepper.time_next(), &cfg, &stepper,
                  &stepper.moments()};
    for (Monitor* m : monitors) m->on_step(view);
    for (long long s = 1; s < cfg.steps; ++s) {
        stepper.advance();
        view.pair_index = stepper.pair_index();
        view.t_next = stepper.time_next();
        for (Monitor* m : monitors) m->on_step(view);
    }
    for (Monitor* m : monitors) m->on_finish();
    RunReport rep;
    rep.final_state = stepper.state();
    rep.pair_index = stepper.pair_index();
    rep.steps_advanced = cfg.steps;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

RunReport run_from(const SolverConfig& cfg, const StatePair& pair, long long pair_index,
                   long long additional, const std::vector<Monitor*>& monitors) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    Stepper stepper(cfg);
    for (Monitor* m : monitors) m->on_start(cfg);
    stepper.resume(pair, pair_index);
    StepView view{stepper.pair_index(), stepper.time_next(), &cfg, &stepper,
                  &stepper.moments()};
    for (long long s = 0; s < additional; ++s) {
        stepper.advance();
        view.pair_index = stepper.pair_index();
        view.t_next = stepper.time_next();
        for (Monitor* m : monitors) m->on_step(view);
    }
    for (Monitor* m : monitors) m->on_finish();
    RunReport rep;
    rep.final_state = stepper.state();
    rep.pair_index = stepper.pair_index();
    rep.steps_advanced = additional;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

SpectralField bdf2ab2_step(const StatePair& pair, const SpectralField& f_next,
                           const SolverConfig& cfg) {
    SolverConfig local = cfg;
    if (local.nonlinearity == Nonlinearity::ExtrapolatedGear)
        local.nonlinearity = Nonlinearity::GalerkinDealiased;
    local.forcing = ForcingSpec::steady(f_next);
    local.steps = 0;
    Stepper stepper(local);
    stepper.resume(pair, 0);
    stepper.advance();
    return stepper.newest();
}

SpectralField extrapolated_gear_step(const StatePair& pair, const SpectralField& f_next,
                                     const SolverConfig& cfg) {
    SolverConfig local = cfg;
    local.nonlinearity = Nonlinearity::ExtrapolatedGear;
    local.forcing = ForcingSpec::steady(f_next);
    local.steps = 0;
    Stepper stepper(local);
    stepper.resume(pair, 0);
    stepper.advance();
    return stepper.newest();
}

StatePair bootstrap_first_step(const SpectralField& omega0, const SolverConfig& cfg) {
    SolverConfig local = cfg;
    local.steps = 0;
    Stepper stepper(local);
    stepper.start(omega0);
    return stepper.state();
}

} // namespace ns2d
