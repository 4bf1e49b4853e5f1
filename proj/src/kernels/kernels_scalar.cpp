#include "epur/kernels.hpp"

#include <cmath>

namespace epur::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double dot_dual_scalar(const double* a, const double* b, const double* c,
                       const double* d, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i] + c[i] * d[i];
    return acc;
}

void recurrence_step_scalar(double* out, const double* x, const double* b,
                            const double* c, double alpha, double beta,
                            std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = alpha * x[i] * b[i] - beta * c[i];
}

double quad_form_scalar(const double* m, const double* v, std::size_t dim,
                        std::size_t ld) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        acc += v[i] * dot_scalar(m + i * ld, v, dim);
    return acc;
}

double bilinear_scalar(const double* m, const double* u, const double* v,
                       std::size_t dim, std::size_t ld) {
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        acc += u[i] * dot_scalar(m + i * ld, v, dim);
    return acc;
}

void abs2_scalar(double* out, const double* re, const double* im,
                 std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = re[i] * re[i] + im[i] * im[i];
}

double weighted_plogp_scalar(const double* w, const double* p, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] > kPlogpFloor) acc += w[i] * p[i] * std::log(p[i]);
    }
    return acc;
}

} // namespace

const Backend& scalar_backend() {
    static const Backend backend{
        "scalar",       dot_scalar,  dot_dual_scalar,       recurrence_step_scalar,
        quad_form_scalar, bilinear_scalar, abs2_scalar, weighted_plogp_scalar,
    };
    return backend;
}

} // namespace epur::kernels
