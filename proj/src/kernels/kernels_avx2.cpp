// AVX2+FMA lane. Compiled with -mavx2 -mfma in its own translation unit;
// dispatch.cpp only hands out these pointers when the CPU reports avx2/fma.
#include "epur/kernels.hpp"

#include <cmath>
#include <immintrin.h>

#ifdef EPUR_HAVE_MVEC
extern "C" __m256d _ZGVdN4v_log(__m256d);
#endif

namespace epur::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double dot_dual_avx2(const double* a, const double* b, const double* c,
                     const double* d, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i), acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i] + c[i] * d[i];
    return acc;
}

void recurrence_step_avx2(double* out, const double* x, const double* b,
                          const double* c, double alpha, double beta,
                          std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d vb = _mm256_set1_pd(beta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xb = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(b + i));
        __m256d r = _mm256_fmsub_pd(va, xb, _mm256_mul_pd(vb, _mm256_loadu_pd(c + i)));
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = alpha * x[i] * b[i] - beta * c[i];
}

double quad_form_avx2(const double* m, const double* v, std::size_t dim,
                      std::size_t ld) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        acc += v[i] * dot_avx2(m + i * ld, v, dim);
    return acc;
}

double bilinear_avx2(const double* m, const double* u, const double* v,
                     std::size_t dim, std::size_t ld) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        acc += u[i] * dot_avx2(m + i * ld, v, dim);
    return acc;
}

void abs2_avx2(double* out, const double* re, const double* im, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_loadu_pd(re + i);
        __m256d m = _mm256_loadu_pd(im + i);
        _mm256_storeu_pd(out + i, _mm256_fmadd_pd(r, r, _mm256_mul_pd(m, m)));
    }
    for (; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

#ifdef EPUR_HAVE_MVEC
double weighted_plogp_avx2(const double* w, const double* p, std::size_t n) {
    const __m256d floor = _mm256_set1_pd(kPlogpFloor);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d pv = _mm256_loadu_pd(p + i);
        __m256d keep = _mm256_cmp_pd(pv, floor, _CMP_GT_OQ);
        // log() is only fed values > floor; skipped lanes see 1.0 (log = 0)
        __m256d safe = _mm256_blendv_pd(one, pv, keep);
        __m256d lg = _ZGVdN4v_log(safe);
        __m256d term = _mm256_mul_pd(_mm256_mul_pd(_mm256_loadu_pd(w + i), pv), lg);
        acc = _mm256_add_pd(acc, _mm256_and_pd(term, keep));
    }
    double total = hsum(acc);
    for (; i < n; ++i) {
        if (p[i] > kPlogpFloor) total += w[i] * p[i] * std::log(p[i]);
    }
    return total;
}
#endif

} // namespace

const Backend& avx2_backend() {
    static const Backend backend{
        "avx2",        dot_avx2,  dot_dual_avx2, recurrence_step_avx2,
        quad_form_avx2, bilinear_avx2, abs2_avx2,
#ifdef EPUR_HAVE_MVEC
        weighted_plogp_avx2,
#else
        scalar_backend().weighted_plogp,
#endif
    };
    return backend;
}

} // namespace epur::kernels
