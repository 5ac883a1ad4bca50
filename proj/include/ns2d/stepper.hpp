#pragma once

#include <memory>
#include <vector>

#include "ns2d/forcing.hpp"
#include "ns2d/nonlinear.hpp"
#include "ns2d/norms.hpp"
#include "ns2d/spectral_field.hpp"

namespace ns2d {

enum class Nonlinearity { GalerkinDealiased, CollocationSkew, ExtrapolatedGear };
enum class BootstrapMode { SemiImplicitEuler, ExactIfKnown };

struct SolverConfig {
    double nu = 0.1;
    double k = 1e-3;
    Grid grid{64};
    Nonlinearity nonlinearity = Nonlinearity::GalerkinDealiased;
    BootstrapMode bootstrap = BootstrapMode::SemiImplicitEuler;
    ForcingSpec forcing;
    long long steps = 0;
    double cw_estimate = 1.0;
    double blowup_threshold = 1e12;

    void validate() const;
};

/// k0 = nu / (50 cw^2 cu m0^2): the time-step restriction under which the
/// G(nu k)-ball of radius max{||V0||_G, rho0} is invariant. m0 is that max,
/// cu the norm-equivalence constant, cw the (estimated) bilinear constant.
double max_stable_timestep(double nu, double cw, double cu, double m0);

/// Integrated moments of the current pair (w^n, w^{n+1}) and forcing, all in
/// the continuum (2pi)^2 normalization. Computed in one fused spectral pass.
struct StepMoments {
    double l2sq_prev = 0.0;   // ||w^n||^2
    double l2sq_next = 0.0;   // ||w^{n+1}||^2
    double cross = 0.0;       // (w^n, w^{n+1})
    double h1sq_prev = 0.0;   // ||grad w^n||^2
    double h1sq_next = 0.0;   // ||grad w^{n+1}||^2
    double h2sq_next = 0.0;   // ||lap w^{n+1}||^2
    double hm1sq_next = 0.0;  // ||w^{n+1}||^2_{H^-1} = ||grad psi^{n+1}||^2
    double gap_l2sq = 0.0;    // ||w^{n+1} - w^n||^2
    double gap_h1sq = 0.0;    // ||grad(w^{n+1} - w^n)||^2
    double f_inner_next = 0.0; // (f^{n+1}, w^{n+1})
    double cross_h1 = 0.0;    // (grad w^n, grad w^{n+1})

    double g_norm_sq(const GWeight& g) const {
        return g.a() * l2sq_prev + 2.0 * g.b() * cross + g.d() * l2sq_next;
    }
    double g_norm_sq_h1(const GWeight& g) const {
        return g.a() * h1sq_prev + 2.0 * g.b() * cross_h1 + g.d() * h1sq_next;
    }
    double energy() const { return 0.5 * hm1sq_next; }
    double enstrophy() const { return 0.5 * l2sq_next; }
    double palinstrophy() const { return 0.5 * h1sq_next; }
};

class Stepper;

/// Read-only view of the run state handed to monitors after every step.
/// pair_index n means the current pair is V_n = (w^n, w^{n+1}); the newest
/// level sits at time (n+1) k. The bootstrap step produces V_0.
struct StepView {
    long long pair_index;
    double t_next;
    const SolverConfig* cfg;
    const Stepper* stepper;
    const StepMoments* moments;
};

class Monitor {
public:
    virtual ~Monitor() = default;
    virtual void on_start(const SolverConfig&) {}
    virtual void on_step(const StepView&) = 0;
    virtual void on_finish() {}
};

/// The two-step solver. One instance drives one trajectory; per-step work is
/// a handful of padded FFTs plus an exact per-mode solve of
///   (3/(2k) - nu laplacian) w^{n+1} = (4 w^n - w^{n-1})/(2k) - NL + f^{n+1}.
/// States live in the mean-zero, Nyquist-free subspace throughout.
class Stepper {
public:
    explicit Stepper(SolverConfig cfg);

    const SolverConfig& config() const { return cfg_; }

    /// First step: semi-implicit Euler (1/k - nu lap) w^1 = w^0/k - NL(w^0) + f^1,
    /// or the manufactured exact omega(k) when configured. Establishes V_0.
    void start(const SpectralField& omega0);

    /// Resume from an existing pair (w^{n}, w^{n+1}) with pair index n.
    void resume(const StatePair& pair, long long pair_index);

    /// Advance one step (BDF2-AB2 or the extrapolated-Gear comparator per
    /// config). Throws BlowupError past the blow-up threshold or on NaN.
    void advance();

    long long pair_index() const { return pair_index_; }
    double time_next() const { return (pair_index_ + 1) * cfg_.k; }

    const StepMoments& moments() const { return moments_; }
    StatePair state() const;
    SpectralField newest() const;
    const Complex* omega_curr_data() const { return om_curr_.data(); }
    const Complex* omega_next_data() const { return om_next_.data(); }
    const Complex* forcing_data() const { return f_.data(); }

private:
    void compute_nonlinearity();
    void evaluate_forcing(double t);
    void solve_and_rotate();
    void refresh_moments();

    SolverConfig cfg_;
    AdvectionKernel kernel_;
    long long pair_index_ = 0;
    bool started_ = false;

    std::vector<Complex> om_prev_, om_curr_, om_next_;
    std::vector<Complex> extrap_, psi_, nl_, nl_curr_, nl_prev_, f_;
    std::vector<double> k2_, inv_k2_, inv_denom_;
    StepMoments moments_;
};

struct RunReport {
    StatePair final_state;
    long long pair_index = 0;
    long long steps_advanced = 0;
    double wall_seconds = 0.0;
};

/// Advances cfg.steps time steps from omega0 (step one is the bootstrap),
/// invoking each monitor after every step. steps == 0 returns the initial
/// data unchanged as a degenerate pair.
RunReport run(const SolverConfig& cfg, const SpectralField& omega0,
              const std::vector<Monitor*>& monitors);

/// Resume flavor: continues an existing pair for `additional` steps.
RunReport run_from(const SolverConfig& cfg, const StatePair& pair, long long pair_index,
                   long long additional, const std::vector<Monitor*>& monitors);

// Single-step convenience wrappers (the spec-level operations).
SpectralField bdf2ab2_step(const StatePair& pair, const SpectralField& f_next,
                           const SolverConfig& cfg);
SpectralField extrapolated_gear_step(const StatePair& pair, const SpectralField& f_next,
                                     const SolverConfig& cfg);
StatePair bootstrap_first_step(const SpectralField& omega0, const SolverConfig& cfg);

} // namespace ns2d
