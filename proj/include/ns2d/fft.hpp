#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ns2d/spectral_field.hpp"

namespace ns2d {

/// FFTW planner rigor. Estimate gives run-to-run deterministic plan choice
/// (the default, and what the reproducibility guarantees assume); Measure
/// lets FFTW time candidate algorithms and may pick differently between
/// invocations.
enum class PlanRigor { Estimate, Measure };

void set_plan_rigor(PlanRigor r);
PlanRigor plan_rigor();

/// Real scratch array with FFTW SIMD alignment.
class AlignedReal {
public:
    AlignedReal() = default;
    explicit AlignedReal(size_t count);
    ~AlignedReal();
    AlignedReal(AlignedReal&& o) noexcept;
    AlignedReal& operator=(AlignedReal&& o) noexcept;
    AlignedReal(const AlignedReal&) = delete;
    AlignedReal& operator=(const AlignedReal&) = delete;

    double* data() { return ptr_; }
    const double* data() const { return ptr_; }
    size_t size() const { return count_; }
    double& operator[](size_t i) { return ptr_[i]; }
    double operator[](size_t i) const { return ptr_[i]; }

private:
    double* ptr_ = nullptr;
    size_t count_ = 0;
};

/// Transform engine for one grid extent m: maps full N x N coefficient
/// spectra (N <= m, modes |k|,|l| <= N/2-1; Nyquist content is dropped)
/// to real m x m grids and back. Used both unpadded (m = N, collocation)
/// and zero-padded (m = 3N/2, dealiased products).
///
/// The grid -> spectrum direction re-imposes Hermitian symmetry exactly,
/// so long runs cannot drift off the real subspace.
///
/// Not thread-safe; create one per thread (see workspace_for).
class FftWorkspace {
public:
    explicit FftWorkspace(int m);
    ~FftWorkspace();
    FftWorkspace(const FftWorkspace&) = delete;
    FftWorkspace& operator=(const FftWorkspace&) = delete;

    int m() const { return m_; }

    /// Evaluates sum_{|k|,|l| < n/2} fhat(k,l) e^{i(kx+ly)} on the m x m grid.
    /// dst must hold m*m doubles with FFTW alignment (AlignedReal).
    void inverse(const Complex* full, int n, double* dst);

    /// Forward transform of an m x m real grid; writes expansion coefficients
    /// of modes |k|,|l| <= n/2-1 into the full n x n spectrum (other bins,
    /// including Nyquist, zeroed). src is modified only by FFTW scratch rules
    /// (out-of-place r2c leaves it intact).
    void forward(double* src, int n, Complex* full);

    /// Full-spectrum transforms on the m x m bin set, Nyquist included.
    /// These are what the public forward_transform/inverse_transform use:
    /// they round-trip arbitrary real samples, at twice the work of the
    /// real-to-complex pair above.
    void forward_c2c(const Complex* grid, Complex* spectrum);   // scales by 1/m^2
    void inverse_c2c(const Complex* spectrum, Complex* grid);   // unnormalized sum

private:
    void pack(const Complex* full, int n);

    int m_;
    void* half_ = nullptr;  // fftw_complex[m * (m/2+1)]
    void* cbuf_in_ = nullptr;
    void* cbuf_out_ = nullptr;
    void* plan_fwd_ = nullptr;
    void* plan_bwd_ = nullptr;
    void* plan_cfwd_ = nullptr;
    void* plan_cbwd_ = nullptr;
    AlignedReal real_;      // plan-owning buffer
};

/// Thread-local cached workspace for extent m.
FftWorkspace& workspace_for(int m);

} // namespace ns2d
