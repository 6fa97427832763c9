#pragma once

#include <cstddef>

namespace flair::kernels {

// Data-parallel inner loops shared by the segmentation stores and the
// tuning pass. Each kernel has a scalar reference implementation and an
// AVX2 variant; dispatch picks the widest ISA the CPU supports at first
// call. Variants are bit-identical: every elementwise operation is an
// IEEE-exact mul/add/sub/div (no FMA contraction; the kernel translation
// units are built with -ffp-contract=off) and the max reduction is
// order-insensitive for non-NaN input.

// max_i |x[i] - (x0 + slope * (t[i] - t0))| over i in [0, n). Returns 0 for
// n == 0.
double max_abs_dev_line(const double* t, const double* x, std::size_t n, double t0, double x0,
                        double slope);

// out[i] = |x[i+1] - x[i]| / (t[i+1] - t[i]) for i in [0, n-1). Requires
// n >= 1; writes n-1 values.
void pairwise_drift(const double* t, const double* x, std::size_t n, double* out);

double max_abs_dev_line_scalar(const double* t, const double* x, std::size_t n, double t0,
                               double x0, double slope);
void pairwise_drift_scalar(const double* t, const double* x, std::size_t n, double* out);

#if defined(__x86_64__) || defined(_M_X64)
#define FLAIR_KERNELS_HAVE_AVX2 1
double max_abs_dev_line_avx2(const double* t, const double* x, std::size_t n, double t0, double x0,
                             double slope);
void pairwise_drift_avx2(const double* t, const double* x, std::size_t n, double* out);
#endif

// "avx2" or "scalar"; what dispatch resolved to on this machine.
const char* active_isa();

// Pins dispatch to the scalar path (tests, FLAIR_FORCE_SCALAR=1 in the
// environment has the same effect). Call before the first kernel use.
void set_force_scalar(bool force);

}  // namespace flair::kernels
