#include "ns2d/fft.hpp"

#include <fftw3.h>

#include <atomic>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>

namespace ns2d {

namespace {
std::atomic<PlanRigor> g_rigor{PlanRigor::Estimate};
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
unsigned planner_flags() {
    return plan_rigor() == PlanRigor::Measure ? FFTW_MEASURE : FFTW_ESTIMATE;
}
} // namespace

void set_plan_rigor(PlanRigor r) { g_rigor.store(r); }
PlanRigor plan_rigor() { return g_rigor.load(); }

AlignedReal::AlignedReal(size_t count) : count_(count) {
    ptr_ = fftw_alloc_real(count);
    std::memset(ptr_, 0, count * sizeof(double));
}
AlignedReal::~AlignedReal() {
    if (ptr_) fftw_free(ptr_);
}
AlignedReal::AlignedReal(AlignedReal&& o) noexcept : ptr_(o.ptr_), count_(o.count_) {
    o.ptr_ = nullptr;
    o.count_ = 0;
}
AlignedReal& AlignedReal::operator=(AlignedReal&& o) noexcept {
    if (this != &o) {
        if (ptr_) fftw_free(ptr_);
        ptr_ = o.ptr_;
        count_ = o.count_;
        o.ptr_ = nullptr;
        o.count_ = 0;
    }
    return *this;
}

FftWorkspace::FftWorkspace(int m) : m_(m), real_(static_cast<size_t>(m) * m) {
    const size_t half_count = static_cast<size_t>(m) * (m / 2 + 1);
    const size_t full_count = static_cast<size_t>(m) * m;
    half_ = fftw_alloc_complex(half_count);
    cbuf_in_ = fftw_alloc_complex(full_count);
    cbuf_out_ = fftw_alloc_complex(full_count);
    std::memset(half_, 0, half_count * sizeof(fftw_complex));
    std::memset(cbuf_in_, 0, full_count * sizeof(fftw_complex));
    std::memset(cbuf_out_, 0, full_count * sizeof(fftw_complex));
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_fwd_ = fftw_plan_dft_r2c_2d(m, m, real_.data(),
                                     static_cast<fftw_complex*>(half_), planner_flags());
    plan_bwd_ = fftw_plan_dft_c2r_2d(m, m, static_cast<fftw_complex*>(half_),
                                     real_.data(), planner_flags());
    plan_cfwd_ = fftw_plan_dft_2d(m, m, static_cast<fftw_complex*>(cbuf_in_),
                                  static_cast<fftw_complex*>(cbuf_out_),
                                  FFTW_FORWARD, planner_flags());
    plan_cbwd_ = fftw_plan_dft_2d(m, m, static_cast<fftw_complex*>(cbuf_in_),
                                  static_cast<fftw_complex*>(cbuf_out_),
                                  FFTW_BACKWARD, planner_flags());
}

FftWorkspace::~FftWorkspace() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    if (plan_cfwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_cfwd_));
    if (plan_cbwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_cbwd_));
    if (half_) fftw_free(half_);
    if (cbuf_in_) fftw_free(cbuf_in_);
    if (cbuf_out_) fftw_free(cbuf_out_);
}

void FftWorkspace::forward_c2c(const Complex* grid, Complex* spectrum) {
    const size_t count = static_cast<size_t>(m_) * m_;
    std::memcpy(cbuf_in_, grid, count * sizeof(Complex));
    fftw_execute(static_cast<fftw_plan>(plan_cfwd_));
    const double scale = 1.0 / static_cast<double>(count);
    const auto* out = static_cast<const fftw_complex*>(cbuf_out_);
    for (size_t i = 0; i < count; ++i)
        spectrum[i] = Complex(out[i][0] * scale, out[i][1] * scale);
}

void FftWorkspace::inverse_c2c(const Complex* spectrum, Complex* grid) {
    const size_t count = static_cast<size_t>(m_) * m_;
    std::memcpy(cbuf_in_, spectrum, count * sizeof(Complex));
    fftw_execute(static_cast<fftw_plan>(plan_cbwd_));
    std::memcpy(grid, cbuf_out_, count * sizeof(Complex));
}

// Fill the half spectrum (dims m x (m/2+1), l = 0..m/2) from the full n x n
// spectrum. Only modes |k|,|l| <= n/2-1 are used; l < 0 rows are implied by
// Hermitian symmetry of the c2r transform.
void FftWorkspace::pack(const Complex* full, int n) {
    auto* half = static_cast<fftw_complex*>(half_);
    std::memset(half, 0, static_cast<size_t>(m_) * (m_ / 2 + 1) * sizeof(fftw_complex));
    const int cut = n / 2; // exclusive
    const int hw = m_ / 2 + 1;
    for (int k = -(cut - 1); k <= cut - 1; ++k) {
        const int src_row = (k + n) % n;
        const int dst_row = (k + m_) % m_;
        const Complex* src = full + static_cast<size_t>(src_row) * n;
        fftw_complex* dst = half + static_cast<size_t>(dst_row) * hw;
        for (int l = 0; l <= cut - 1; ++l) {
            dst[l][0] = src[l].real();
            dst[l][1] = src[l].imag();
        }
    }
}

void FftWorkspace::inverse(const Complex* full, int n, double* dst) {
    pack(full, n);
    fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_bwd_),
                         static_cast<fftw_complex*>(half_), dst);
}

void FftWorkspace::forward(double* src, int n, Complex* full) {
    auto* half = static_cast<fftw_complex*>(half_);
    fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_fwd_), src, half);
    const double scale = 1.0 / (static_cast<double>(m_) * m_);
    const int cut = n / 2;
    const int hw = m_ / 2 + 1;
    std::memset(full, 0, static_cast<size_t>(n) * n * sizeof(Complex));
    // l = 0 column: take k >= 0 and mirror, so the result is exactly Hermitian.
    full[0] = Complex(half[0][0] * scale, 0.0);
    for (int k = 1; k <= cut - 1; ++k) {
        const Complex c(half[static_cast<size_t>(k) * hw][0] * scale,
                        half[static_cast<size_t>(k) * hw][1] * scale);
        full[static_cast<size_t>(k) * n] = c;
        full[static_cast<size_t>(n - k) * n] = std::conj(c);
    }
    for (int l = 1; l <= cut - 1; ++l) {
        for (int k = -(cut - 1); k <= cut - 1; ++k) {
            const int src_row = (k + m_) % m_;
            const Complex c(half[static_cast<size_t>(src_row) * hw + l][0] * scale,
                            half[static_cast<size_t>(src_row) * hw + l][1] * scale);
            const int a = (k + n) % n;
            const int am = (n - a) % n;
            full[static_cast<size_t>(a) * n + l] = c;
            full[static_cast<size_t>(am) * n + (n - l)] = std::conj(c);
        }
    }
}

FftWorkspace& workspace_for(int m) {
    thread_local std::map<int, std::unique_ptr<FftWorkspace>> cache;
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<FftWorkspace>(m);
    return *slot;
}

} // namespace ns2d
