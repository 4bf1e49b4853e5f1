// NEON lane (aarch64). Two-wide double vectors; always available on arm64.
#include "epur/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>
#include <cmath>

namespace epur::kernels {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    for (; i + 2 <= n; i += 2)
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double dot_dual_neon(const double* a, const double* b, const double* c,
                     const double* d, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(c + i), vld1q_f64(d + i));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i] + c[i] * d[i];
    return acc;
}

void recurrence_step_neon(double* out, const double* x, const double* b,
                          const double* c, double alpha, double beta,
                          std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    const float64x2_t vb = vdupq_n_f64(-beta);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t xb = vmulq_f64(vld1q_f64(x + i), vld1q_f64(b + i));
        float64x2_t r = vfmaq_f64(vmulq_f64(vb, vld1q_f64(c + i)), va, xb);
        vst1q_f64(out + i, r);
    }
    for (; i < n; ++i) out[i] = alpha * x[i] * b[i] - beta * c[i];
}

double quad_form_neon(const double* m, const double* v, std::size_t dim,
                      std::size_t ld) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        acc += v[i] * dot_neon(m + i * ld, v, dim);
    return acc;
}

double bilinear_neon(const double* m, const double* u, const double* v,
                     std::size_t dim, std::size_t ld) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        acc += u[i] * dot_neon(m + i * ld, v, dim);
    return acc;
}

void abs2_neon(double* out, const double* re, const double* im, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t r = vld1q_f64(re + i);
        float64x2_t m = vld1q_f64(im + i);
        vst1q_f64(out + i, vfmaq_f64(vmulq_f64(m, m), r, r));
    }
    for (; i < n; ++i) out[i] = re[i] * re[i] + im[i] * im[i];
}

} // namespace

const Backend& neon_backend() {
    static const Backend backend{
        "neon",        dot_neon,  dot_dual_neon, recurrence_step_neon,
        quad_form_neon, bilinear_neon, abs2_neon,
        // no vector log on this lane; the scalar sum is already log-bound
        scalar_backend().weighted_plogp,
    };
    return backend;
}

} // namespace epur::kernels

#endif // __aarch64__
