#include "flair/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

namespace flair::kernels {

double max_abs_dev_line_scalar(const double* t, const double* x, std::size_t n, double t0,
                               double x0, double slope) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double predicted = x0 + slope * (t[i] - t0);
        const double dev = std::fabs(x[i] - predicted);
        if (dev > worst) worst = dev;
    }
    return worst;
}

void pairwise_drift_scalar(const double* t, const double* x, std::size_t n, double* out) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
        out[i] = std::fabs(x[i + 1] - x[i]) / (t[i + 1] - t[i]);
    }
}

namespace {

using MaxDevFn = double (*)(const double*, const double*, std::size_t, double, double, double);
using DriftFn = void (*)(const double*, const double*, std::size_t, double*);

std::atomic<bool> g_force_scalar{false};

bool use_avx2() {
#if FLAIR_KERNELS_HAVE_AVX2
    if (g_force_scalar.load(std::memory_order_relaxed)) return false;
    if (const char* env = std::getenv("FLAIR_FORCE_SCALAR"); env && env[0] == '1') return false;
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

MaxDevFn pick_max_dev() {
#if FLAIR_KERNELS_HAVE_AVX2
    if (use_avx2()) return &max_abs_dev_line_avx2;
#endif
    return &max_abs_dev_line_scalar;
}

DriftFn pick_drift() {
#if FLAIR_KERNELS_HAVE_AVX2
    if (use_avx2()) return &pairwise_drift_avx2;
#endif
    return &pairwise_drift_scalar;
}

std::atomic<MaxDevFn> g_max_dev{nullptr};
std::atomic<DriftFn> g_drift{nullptr};

}  // namespace

void set_force_scalar(bool force) {
    g_force_scalar.store(force, std::memory_order_relaxed);
    g_max_dev.store(nullptr, std::memory_order_relaxed);
    g_drift.store(nullptr, std::memory_order_relaxed);
}

const char* active_isa() { return use_avx2() ? "avx2" : "scalar"; }

double max_abs_dev_line(const double* t, const double* x, std::size_t n, double t0, double x0,
                        double slope) {
    MaxDevFn fn = g_max_dev.load(std::memory_order_relaxed);
    if (!fn) {
        fn = pick_max_dev();
        g_max_dev.store(fn, std::memory_order_relaxed);
    }
    return fn(t, x, n, t0, x0, slope);
}

void pairwise_drift(const double* t, const double* x, std::size_t n, double* out) {
    DriftFn fn = g_drift.load(std::memory_order_relaxed);
    if (!fn) {
        fn = pick_drift();
        g_drift.store(fn, std::memory_order_relaxed);
    }
    fn(t, x, n, out);
}

}  // namespace flair::kernels
