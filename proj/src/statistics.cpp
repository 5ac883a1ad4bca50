#include "ns2d/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ns2d {

namespace {

struct TwoSum {
    double sum;
    double err;
};

inline TwoSum two_sum(double a, double b) {
    const double s = a + b;
    const double bv = s - a;
    const double av = s - bv;
    return {s, (a - av) + (b - bv)};
}

// Requires |a| >= |b|.
inline TwoSum fast_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

} // namespace

void ExactSum::add(double x) {
    // GROW-EXPANSION: carry x through the components with exact two-sums;
    // each small residue becomes a component, the carry ends on top.
    size_t out = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        const TwoSum ts = two_sum(x, parts_[i]);
        x = ts.sum;
        if (ts.err != 0.0) parts_[out++] = ts.err;
    }
    parts_.resize(out);
    if (x != 0.0 || parts_.empty()) parts_.push_back(x);
    if (parts_.size() > 48) compress();
}

void ExactSum::add(const ExactSum& other) {
    for (double p : other.parts_) add(p);
}

void ExactSum::compress() {
    if (parts_.size() < 2) return;
    // Shewchuk's COMPRESS: top-down then bottom-up fast-two-sum sweeps.
    // Afterwards the largest component is the correctly rounded total.
    std::vector<double> g(parts_.size());
    double q = parts_.back();
    size_t bottom = parts_.size() - 1;
    for (size_t i = parts_.size() - 1; i-- > 0;) {
        const TwoSum ts = fast_two_sum(q, parts_[i]);
        if (ts.err != 0.0) {
            g[bottom--] = ts.sum;
            q = ts.err;
        } else {
            q = ts.sum;
        }
    }
    g[bottom] = q;

    std::vector<double> h;
    h.reserve(parts_.size());
    q = g[bottom];
    for (size_t i = bottom + 1; i < g.size(); ++i) {
        const TwoSum ts = fast_two_sum(g[i], q);
        if (ts.err != 0.0) h.push_back(ts.err);
        q = ts.sum;
    }
    h.push_back(q);
    parts_ = std::move(h);
}

double ExactSum::value() const {
    if (parts_.empty()) return 0.0;
    ExactSum tmp = *this;
    tmp.compress();
    return tmp.parts_.back();
}

ObservationRow observe(const StatePair& state, const SpectralField& psi,
                       const SpectralField& f, double nu,
                       const std::vector<std::pair<int, int>>& basis_modes) {
    if (!state.newer.same_grid(psi) || !state.newer.same_grid(f))
        throw SizeError("observe: grid mismatch");
    const SpectralField& w = state.newer;
    ObservationRow row;
    const double l2 = sobolev_norm(w, 0.0);
    const double h1 = sobolev_norm(w, 1.0);
    row.enstrophy = 0.5 * l2 * l2;
    const double grad_psi = sobolev_norm(psi, 1.0);
    row.energy = 0.5 * grad_psi * grad_psi;
    row.palinstrophy = 0.5 * h1 * h1;
    SpectralField diff = state.newer;
    diff -= state.older;
    row.gap_l2 = sobolev_norm(diff, 0.0);
    row.gap_h1 = sobolev_norm(diff, 1.0);
    row.balance = nu * h1 * h1 - l2_inner(f, w);
    row.mode_projections.reserve(basis_modes.size());
    const double box = kTwoPi * kTwoPi;
    for (const auto& [k, l] : basis_modes)
        row.mode_projections.push_back(box * w.at(k, l));
    return row;
}

std::vector<double> shell_spectrum(const SpectralField& omega) {
    const int n = omega.n();
    const Grid& grid = omega.grid();
    const int max_shell =
        static_cast<int>(std::lround(std::sqrt(2.0) * (n / 2))) + 1;
    std::vector<double> shells(static_cast<size_t>(max_shell) + 1, 0.0);
    for (int a = 0; a < n; ++a) {
        const double k = grid.wavenumber(a);
        for (int b = 0; b < n; ++b) {
            const double l = grid.wavenumber(b);
            const int shell = static_cast<int>(std::lround(std::sqrt(k * k + l * l)));
            shells[shell] += std::norm(omega.bin(a, b));
        }
    }
    const double half_box = 0.5 * kTwoPi * kTwoPi;
    for (double& s : shells) s *= half_box;
    return shells;
}

StatsAccumulator::StatsAccumulator(std::vector<std::string> names, long long burn_in_steps)
    : names_(std::move(names)),
      burn_in_(burn_in_steps),
      sums_(names_.size()),
      sumsq_(names_.size()) {}

void StatsAccumulator::record(long long step_index, const std::vector<double>& values) {
    if (values.size() != names_.size())
        throw std::invalid_argument("StatsAccumulator: value count mismatch");
    if (step_index < burn_in_) return;
    for (size_t i = 0; i < values.size(); ++i) {
        sums_[i].add(values[i]);
        sumsq_[i].add(values[i] * values[i]);
    }
    ++samples_;
}

void StatsAccumulator::merge(const StatsAccumulator& other) {
    if (other.names_ != names_)
        throw std::invalid_argument("StatsAccumulator: observable mismatch in merge");
    for (size_t i = 0; i < sums_.size(); ++i) {
        sums_[i].add(other.sums_[i]);
        sumsq_[i].add(other.sumsq_[i]);
    }
    samples_ += other.samples_;
}

double StatsAccumulator::mean(size_t i) const {
    return samples_ > 0 ? sums_[i].value() / static_cast<double>(samples_) : 0.0;
}

double StatsAccumulator::variance(size_t i) const {
    if (samples_ < 2) return 0.0;
    const double n = static_cast<double>(samples_);
    const double m = sums_[i].value() / n;
    const double var = (sumsq_[i].value() - n * m * m) / (n - 1.0);
    return std::max(var, 0.0);
}

double StatsAccumulator::mean_of(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw std::invalid_argument("StatsAccumulator: unknown observable " + name);
    return mean(static_cast<size_t>(it - names_.begin()));
}

BootstrapCI block_bootstrap_ci(const std::vector<double>& series, int resamples,
                               std::uint64_t seed) {
    BootstrapCI ci;
    const size_t n = series.size();
    if (n == 0) return ci;
    double total = 0.0;
    for (double v : series) total += v;
    ci.mean = total / static_cast<double>(n);
    if (n == 1 || resamples < 2) {
        ci.lo = ci.hi = ci.mean;
        return ci;
    }

    const size_t block = std::max<size_t>(1, static_cast<size_t>(std::sqrt(double(n))));
    const size_t blocks_needed = (n + block - 1) / block;
    std::mt19937_64 rng(seed);
    std::vector<double> means(static_cast<size_t>(resamples));
    for (int r = 0; r < resamples; ++r) {
        double sum = 0.0;
        size_t taken = 0;
        for (size_t bidx = 0; bidx < blocks_needed; ++bidx) {
            const size_t start = static_cast<size_t>(rng() % n);
            for (size_t j = 0; j < block && taken < n; ++j, ++taken)
                sum += series[(start + j) % n];
        }
        means[static_cast<size_t>(r)] = sum / static_cast<double>(n);
    }
    std::sort(means.begin(), means.end());
    const auto pick = [&](double q) {
        const double idx = q * (means.size() - 1);
        const size_t lo = static_cast<size_t>(idx);
        const size_t hi = std::min(lo + 1, means.size() - 1);
        const double w = idx - lo;
        return (1.0 - w) * means[lo] + w * means[hi];
    };
    ci.lo = pick(0.025);
    ci.hi = pick(0.975);
    double m2 = 0.0, m1 = 0.0;
    for (double v : means) m1 += v;
    m1 /= means.size();
    for (double v : means) m2 += (v - m1) * (v - m1);
    ci.sigma = std::sqrt(m2 / (means.size() - 1));
    return ci;
}

ConvergenceAssessment assess_convergence(const std::vector<ObservableByK>& by_k) {
    ConvergenceAssessment a;
    if (by_k.size() < 2) {
        a.pass = true;
        return a;
    }
    for (size_t i = 0; i + 1 < by_k.size(); ++i) {
        a.diffs.push_back(std::abs(by_k[i].ci.mean - by_k[i + 1].ci.mean));
        a.combined_half_widths.push_back(by_k[i].ci.half_width() +
                                         by_k[i + 1].ci.half_width());
    }
    a.pass = true;
    for (size_t i = 1; i < a.diffs.size(); ++i) {
        const bool decreasing = a.diffs[i] <= a.diffs[i - 1];
        const bool within_ci = a.diffs[i] <= a.combined_half_widths[i];
        if (!decreasing && !within_ci) a.pass = false;
    }
    return a;
}

} // namespace ns2d
