#include "ns2d/norms.hpp"

#include <cmath>

namespace ns2d {

namespace {

// One pass over the spectrum applying |kappa|^{2s} weights. The kappa = 0
// term is skipped: fields are mean zero and negative s would blow up there.
template <typename F>
void for_each_weighted(const Grid& grid, double s, F&& body) {
    const int n = grid.n;
    for (int a = 0; a < n; ++a) {
        const double k = grid.wavenumber(a);
        for (int b = 0; b < n; ++b) {
            const double l = grid.wavenumber(b);
            const double k2 = k * k + l * l;
            if (k2 == 0.0) continue;
            body(a, b, s == 0.0 ? 1.0 : std::pow(k2, s));
        }
    }
}

} // namespace

double sobolev_norm(const SpectralField& f, double s) {
    double sum = 0.0;
    for_each_weighted(f.grid(), s, [&](int a, int b, double w) {
        sum += w * std::norm(f.bin(a, b));
    });
    return kTwoPi * std::sqrt(sum);
}

double sobolev_inner(const SpectralField& f, const SpectralField& g, double s) {
    if (!f.same_grid(g)) throw SizeError("sobolev_inner: grid mismatch");
    double sum = 0.0;
    for_each_weighted(f.grid(), s, [&](int a, int b, double w) {
        sum += w * (f.bin(a, b) * std::conj(g.bin(a, b))).real();
    });
    return kTwoPi * kTwoPi * sum;
}

double l2_inner(const SpectralField& f, const SpectralField& g) {
    return sobolev_inner(f, g, 0.0);
}

double quadrature_inner(const std::vector<double>& f, const std::vector<double>& g,
                        Grid grid) {
    if (f.size() != static_cast<size_t>(grid.size()) || g.size() != f.size())
        throw SizeError("quadrature_inner: expected N*N samples");
    const double h = grid.spacing();
    double sum = 0.0;
    for (size_t i = 0; i < f.size(); ++i) sum += f[i] * g[i];
    return h * h * sum;
}

GWeight::GWeight(double mu_value) : mu(mu_value) {
    if (mu < 0.0) throw std::invalid_argument("GWeight: mu must be nonnegative");
}

double GWeight::eigenvalue_min() const {
    const double tr = a() + d();
    const double det = a() * d() - b() * b();
    return 0.5 * (tr - std::sqrt(tr * tr - 4.0 * det));
}

double GWeight::eigenvalue_max() const {
    const double tr = a() + d();
    const double det = a() * d() - b() * b();
    return 0.5 * (tr + std::sqrt(tr * tr - 4.0 * det));
}

double g_norm_sq(const StatePair& pair, const GWeight& g) {
    if (!pair.older.same_grid(pair.newer)) throw SizeError("g_norm_sq: grid mismatch");
    const int n = pair.older.n();
    double s00 = 0.0, s11 = 0.0, s01 = 0.0;
    const Complex* v0 = pair.older.data();
    const Complex* v1 = pair.newer.data();
    const size_t count = pair.older.size();
    for (size_t i = 0; i < count; ++i) {
        s00 += std::norm(v0[i]);
        s11 += std::norm(v1[i]);
        s01 += (v0[i] * std::conj(v1[i])).real();
    }
    (void)n;
    const double box = kTwoPi * kTwoPi;
    return box * (g.a() * s00 + 2.0 * g.b() * s01 + g.d() * s11);
}

EquivalenceConstants g_equivalence_constants(double mu_max) {
    if (mu_max < 0.0 || mu_max > 1.0)
        throw std::invalid_argument("g_equivalence_constants: mu_max must be in [0,1]");
    const double c_u = 1.0 / GWeight(0.0).eigenvalue_min();
    const double c_l = 1.0 / GWeight(mu_max).eigenvalue_max();
    return {c_l, c_u};
}

namespace {

struct IdentitySides {
    double lhs;
    double rhs;
};

IdentitySides g_identity_sides(const SpectralField& v0, const SpectralField& v1,
                               const SpectralField& v2, double mu) {
    if (!v0.same_grid(v1) || !v1.same_grid(v2))
        throw SizeError("g_identity_residual: grid mismatch");
    if (mu < 0.0) throw std::invalid_argument("g_identity_residual: mu must be >= 0");

    const Complex* a0 = v0.data();
    const Complex* a1 = v1.data();
    const Complex* a2 = v2.data();
    const size_t count = v0.size();
    double n0 = 0.0, n1 = 0.0, n2 = 0.0, p01 = 0.0, p12 = 0.0, p02 = 0.0, comb = 0.0;
    const double op = 1.0 + mu;
    for (size_t i = 0; i < count; ++i) {
        n0 += std::norm(a0[i]);
        n1 += std::norm(a1[i]);
        n2 += std::norm(a2[i]);
        p01 += (a0[i] * std::conj(a1[i])).real();
        p12 += (a1[i] * std::conj(a2[i])).real();
        p02 += (a0[i] * std::conj(a2[i])).real();
        comb += std::norm(op * a2[i] - 2.0 * a1[i] + a0[i]);
    }
    const double box = kTwoPi * kTwoPi;
    const GWeight g(mu);
    const double lhs = box * ((1.5 + 0.5 * mu) * n2 - 2.0 * p12 + 0.5 * p02);
    const double gv1 = box * (g.a() * n1 + 2.0 * g.b() * p12 + g.d() * n2);
    const double gv0 = box * (g.a() * n0 + 2.0 * g.b() * p01 + g.d() * n1);
    const double rhs = 0.5 * (gv1 - gv0 / op) + box * comb / (4.0 * op);
    return {lhs, rhs};
}

} // namespace

double g_identity_residual(const SpectralField& v0, const SpectralField& v1,
                           const SpectralField& v2, double mu) {
    const IdentitySides s = g_identity_sides(v0, v1, v2, mu);
    return s.lhs - s.rhs;
}

double g_identity_scale(const SpectralField& v0, const SpectralField& v1,
                        const SpectralField& v2, double mu) {
    const IdentitySides s = g_identity_sides(v0, v1, v2, mu);
    return std::max({std::abs(s.lhs), std::abs(s.rhs), 1e-300});
}

} // namespace ns2d
