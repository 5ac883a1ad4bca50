#include "ns2d/nonlinear.hpp"

#include <cmath>
#include <map>
#include <memory>

#include "ns2d/norms.hpp"
#include "ns2d/operators.hpp"

namespace ns2d {

AdvectionKernel::AdvectionKernel(Grid grid)
    : grid_(grid),
      pad_m_(3 * grid.n / 2),
      spec_a_(grid.size()),
      spec_b_(grid.size()),
      ra_(static_cast<size_t>(pad_m_) * pad_m_),
      rb_(static_cast<size_t>(pad_m_) * pad_m_),
      rc_(static_cast<size_t>(pad_m_) * pad_m_),
      racc_(static_cast<size_t>(pad_m_) * pad_m_) {}

// spec_a_ <- derivative of src along axis (0 = x, 1 = y), sign * i k.
void AdvectionKernel::derivative_into(const Complex* src, int axis, double sign) {
    const int n = grid_.n;
    for (int a = 0; a < n; ++a) {
        const double kx = grid_.wavenumber(a);
        for (int b = 0; b < n; ++b) {
            const double w = sign * (axis == 0 ? kx : grid_.wavenumber(b));
            spec_a_[static_cast<size_t>(a) * n + b] =
                Complex(0.0, w) * src[static_cast<size_t>(a) * n + b];
        }
    }
}

void AdvectionKernel::galerkin(const Complex* psi, const Complex* omega, Complex* out) {
    const int n = grid_.n;
    const size_t mm = static_cast<size_t>(pad_m_) * pad_m_;
    FftWorkspace& ws = workspace_for(pad_m_);

    derivative_into(psi, 1, -1.0);            // u = -psi_y
    ws.inverse(spec_a_.data(), n, ra_.data());
    derivative_into(omega, 0, 1.0);           // omega_x
    ws.inverse(spec_a_.data(), n, rb_.data());
    for (size_t i = 0; i < mm; ++i) racc_[i] = ra_[i] * rb_[i];

    derivative_into(psi, 0, 1.0);             // v = psi_x
    ws.inverse(spec_a_.data(), n, ra_.data());
    derivative_into(omega, 1, 1.0);           // omega_y
    ws.inverse(spec_a_.data(), n, rb_.data());
    for (size_t i = 0; i < mm; ++i) racc_[i] += ra_[i] * rb_[i];

    ws.forward(racc_.data(), n, out);
    out[0] = Complex(0.0, 0.0);
}

void AdvectionKernel::collocation_skew(const Complex* psi, const Complex* omega,
                                       Complex* out) {
    const int n = grid_.n;
    const size_t nn = static_cast<size_t>(n) * n;
    FftWorkspace& ws = workspace_for(n);

    derivative_into(psi, 1, -1.0);            // u
    ws.inverse(spec_a_.data(), n, ra_.data());
    derivative_into(psi, 0, 1.0);             // v
    ws.inverse(spec_a_.data(), n, rb_.data());
    ws.inverse(omega, n, rc_.data());         // omega on the grid

    // div_N(u omega): forward each product, then spectral divergence.
    for (size_t i = 0; i < nn; ++i) racc_[i] = ra_[i] * rc_[i];
    ws.forward(racc_.data(), n, spec_b_.data());
    for (int a = 0; a < n; ++a) {
        const double kx = grid_.wavenumber(a);
        for (int b = 0; b < n; ++b)
            out[static_cast<size_t>(a) * n + b] =
                Complex(0.0, kx) * spec_b_[static_cast<size_t>(a) * n + b];
    }
    for (size_t i = 0; i < nn; ++i) racc_[i] = rb_[i] * rc_[i];
    ws.forward(racc_.data(), n, spec_b_.data());
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const double ky = grid_.wavenumber(b);
            out[static_cast<size_t>(a) * n + b] +=
                Complex(0.0, ky) * spec_b_[static_cast<size_t>(a) * n + b];
        }
    }

    // u . grad_N omega
    derivative_into(omega, 0, 1.0);
    ws.inverse(spec_a_.data(), n, rc_.data());
    for (size_t i = 0; i < nn; ++i) racc_[i] = ra_[i] * rc_[i];
    derivative_into(omega, 1, 1.0);
    ws.inverse(spec_a_.data(), n, rc_.data());
    for (size_t i = 0; i < nn; ++i) racc_[i] += rb_[i] * rc_[i];
    ws.forward(racc_.data(), n, spec_b_.data());

    for (size_t i = 0; i < nn; ++i) out[i] = 0.5 * (out[i] + spec_b_[i]);
    out[0] = Complex(0.0, 0.0);
}

void AdvectionKernel::product_dealiased(const Complex* f, const Complex* g, Complex* out) {
    const int n = grid_.n;
    const size_t mm = static_cast<size_t>(pad_m_) * pad_m_;
    FftWorkspace& ws = workspace_for(pad_m_);
    ws.inverse(f, n, ra_.data());
    ws.inverse(g, n, rb_.data());
    for (size_t i = 0; i < mm; ++i) racc_[i] = ra_[i] * rb_[i];
    ws.forward(racc_.data(), n, out);
}

void AdvectionKernel::jacobian(const Complex* psi, const Complex* phi, Complex* out) {
    galerkin(psi, phi, out);
}

namespace {
AdvectionKernel& kernel_for(Grid grid) {
    thread_local std::map<int, std::unique_ptr<AdvectionKernel>> cache;
    auto& slot = cache[grid.n];
    if (!slot) slot = std::make_unique<AdvectionKernel>(grid);
    return *slot;
}
void require_same_grid(const SpectralField& a, const SpectralField& b, const char* who) {
    if (!a.same_grid(b)) throw SizeError(std::string(who) + ": grid mismatch");
}
} // namespace

SpectralField advect_galerkin(const SpectralField& psi, const SpectralField& omega) {
    require_same_grid(psi, omega, "advect_galerkin");
    SpectralField out(psi.grid());
    kernel_for(psi.grid()).galerkin(psi.data(), omega.data(), out.data());
    return out;
}

SpectralField advect_collocation_skew(const SpectralField& psi, const SpectralField& omega) {
    require_same_grid(psi, omega, "advect_collocation_skew");
    SpectralField out(psi.grid());
    kernel_for(psi.grid()).collocation_skew(psi.data(), omega.data(), out.data());
    return out;
}

double trilinear_b(const SpectralField& psi, const SpectralField& phi,
                   const SpectralField& vphi) {
    require_same_grid(psi, phi, "trilinear_b");
    require_same_grid(psi, vphi, "trilinear_b");
    SpectralField jac(psi.grid());
    kernel_for(psi.grid()).jacobian(psi.data(), phi.data(), jac.data());
    return l2_inner(jac, vphi);
}

namespace {
struct VariantSpec {
    double s_lhs, s_psi, s_phi;
    const char* name;
};
VariantSpec variant_spec(WenteVariant v) {
    switch (v) {
        case WenteVariant::Hm1_H1H1: return {-1.0, 1.0, 1.0, "Hm1_H1H1"};
        case WenteVariant::Hm1_H2L2: return {-1.0, 2.0, 0.0, "Hm1_H2L2"};
        case WenteVariant::L2_H2H1:  return {0.0, 2.0, 1.0, "L2_H2H1"};
        case WenteVariant::L2_H1H2:  return {0.0, 1.0, 2.0, "L2_H1H2"};
        case WenteVariant::H1_H2H2:  return {1.0, 2.0, 2.0, "H1_H2H2"};
    }
    throw std::invalid_argument("unknown Wente variant");
}
} // namespace

const char* wente_variant_name(WenteVariant v) { return variant_spec(v).name; }

double wente_ratio(const SpectralField& psi, const SpectralField& phi,
                   WenteVariant variant) {
    require_same_grid(psi, phi, "wente_ratio");
    const VariantSpec vs = variant_spec(variant);
    const double denom = sobolev_norm(psi, vs.s_psi) * sobolev_norm(phi, vs.s_phi);
    if (denom < 1e-300)
        throw std::invalid_argument("wente_ratio: degenerate input (zero denominator norm)");
    SpectralField jac(psi.grid());
    kernel_for(psi.grid()).jacobian(psi.data(), phi.data(), jac.data());
    return sobolev_norm(jac, vs.s_lhs) / denom;
}

} // namespace ns2d
