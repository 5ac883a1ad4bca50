#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ns2d/norms.hpp"
#include "ns2d/spectral_field.hpp"

namespace ns2d {

/// Error-free compensated summation (Shewchuk expansion arithmetic): the
/// running sum is held exactly as a sum of nonoverlapping doubles, so
/// accumulation order does not matter and merging two accumulators gives
/// bit-identical totals to accumulating the concatenation. value() returns
/// the correctly rounded total. This is the strong form of the compensated
/// summation the long-run accumulators require; plain Kahan cannot merge
/// exactly.
class ExactSum {
public:
    void add(double x);
    void add(const ExactSum& other);
    double value() const;
    void clear() { parts_.clear(); }

private:
    void compress();
    std::vector<double> parts_; // nonoverlapping, increasing magnitude
};

/// One recorded sample of the registered observables.
struct ObservationRow {
    double energy = 0.0;        // 1/2 ||grad psi||^2
    double enstrophy = 0.0;     // 1/2 ||omega||^2
    double palinstrophy = 0.0;  // 1/2 ||grad omega||^2
    double gap_l2 = 0.0;        // ||w^{n+1} - w^n||
    double gap_h1 = 0.0;        // ||grad(w^{n+1} - w^n)||
    double balance = 0.0;       // nu ||grad w||^2 - (f, w)
    std::vector<Complex> mode_projections; // (w, e^{i(kx+ly)}) per basis mode
};

/// Cylindrical-coordinate observation of a state: the scalar invariants plus
/// L2 projections onto the chosen Fourier basis modes. The scalars describe
/// the newer level of the pair; the gap couples both.
ObservationRow observe(const StatePair& state, const SpectralField& psi,
                       const SpectralField& f, double nu,
                       const std::vector<std::pair<int, int>>& basis_modes);

/// Enstrophy binned by integer shell kappa = round(|wavevector|); entry [j]
/// is the shell-j content, and the entries sum to the total enstrophy.
std::vector<double> shell_spectrum(const SpectralField& omega);

/// Running mean/variance accumulator over named observables. Samples before
/// burn_in_steps are ignored. Sums and sums of squares are kept with exact
/// compensated summation (see ExactSum), so merge() over disjoint windows
/// reproduces concatenated accumulation exactly.
class StatsAccumulator {
public:
    StatsAccumulator() = default;
    StatsAccumulator(std::vector<std::string> names, long long burn_in_steps);

    void record(long long step_index, const std::vector<double>& values);
    void merge(const StatsAccumulator& other);

    long long samples() const { return samples_; }
    long long burn_in_steps() const { return burn_in_; }
    const std::vector<std::string>& names() const { return names_; }
    double mean(size_t i) const;
    double variance(size_t i) const;
    double mean_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
    long long burn_in_ = 0;
    long long samples_ = 0;
    std::vector<ExactSum> sums_;
    std::vector<ExactSum> sumsq_;
};

/// Circular moving-block bootstrap confidence interval for the mean of a
/// (possibly autocorrelated) series. Block length defaults to floor(sqrt(n)).
struct BootstrapCI {
    double mean = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double sigma = 0.0;
    double half_width() const { return 0.5 * (hi - lo); }
};
BootstrapCI block_bootstrap_ci(const std::vector<double>& series, int resamples,
                               std::uint64_t seed);

/// One observable's time average at one time step size.
struct ObservableByK {
    double k = 0.0;
    BootstrapCI ci;
};

/// Self-convergence assessment across k-halvings at fixed physical horizon:
/// successive |avg(k) - avg(k/2)| must decrease or be statistically zero
/// (inside the combined CI half-widths).
struct ConvergenceAssessment {
    bool pass = false;
    std::vector<double> diffs;
    std::vector<double> combined_half_widths;
};
ConvergenceAssessment assess_convergence(const std::vector<ObservableByK>& by_k);

} // namespace ns2d
