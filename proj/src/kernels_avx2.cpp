// AVX2 kernel variants. This translation unit is the only one built with
// -mavx2; it must not be entered unless dispatch confirmed AVX2 support.
// -mfma stays off so mul/add below cannot contract into FMA, which would
// break bit-equivalence with the scalar reference.

#include "flair/kernels.hpp"

#if FLAIR_KERNELS_HAVE_AVX2

#include <immintrin.h>

#include <cmath>

namespace flair::kernels {

namespace {

inline double hmax(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d m = _mm_max_pd(lo, hi);
    m = _mm_max_sd(m, _mm_unpackhi_pd(m, m));
    return _mm_cvtsd_f64(m);
}

const __m256d kAbsMask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

}  // namespace

double max_abs_dev_line_avx2(const double* t, const double* x, std::size_t n, double t0, double x0,
                             double slope) {
    const __m256d vt0 = _mm256_set1_pd(t0);
    const __m256d vx0 = _mm256_set1_pd(x0);
    const __m256d vslope = _mm256_set1_pd(slope);
    __m256d vworst = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vt = _mm256_loadu_pd(t + i);
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d predicted =
            _mm256_add_pd(vx0, _mm256_mul_pd(vslope, _mm256_sub_pd(vt, vt0)));
        const __m256d dev = _mm256_and_pd(_mm256_sub_pd(vx, predicted), kAbsMask);
        vworst = _mm256_max_pd(vworst, dev);
    }

    double worst = hmax(vworst);
    for (; i < n; ++i) {
        const double predicted = x0 + slope * (t[i] - t0);
        const double dev = std::fabs(x[i] - predicted);
        if (dev > worst) worst = dev;
    }
    return worst;
}

void pairwise_drift_avx2(const double* t, const double* x, std::size_t n, double* out) {
    if (n < 2) return;
    const std::size_t count = n - 1;
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        const __m256d dx =
            _mm256_and_pd(_mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i)),
                          kAbsMask);
        const __m256d dt = _mm256_sub_pd(_mm256_loadu_pd(t + i + 1), _mm256_loadu_pd(t + i));
        _mm256_storeu_pd(out + i, _mm256_div_pd(dx, dt));
    }
    for (; i < count; ++i) {
        out[i] = std::fabs(x[i + 1] - x[i]) / (t[i + 1] - t[i]);
    }
}

}  // namespace flair::kernels

#endif  // FLAIR_KERNELS_HAVE_AVX2
