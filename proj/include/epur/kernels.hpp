#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace epur::kernels {

/// Density values at or below this floor contribute zero to p*ln(p) sums
/// (the p -> 0 limit). Negative entries are treated the same way.
inline constexpr double kPlogpFloor = 1e-300;

/// One set of inner-loop implementations. All pointers are contiguous
/// double arrays; `ld` is a row stride (leading dimension) in elements.
struct Backend {
    const char* name;

    // sum_i a[i]*b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);

    // sum_i a[i]*b[i] + c[i]*d[i]
    double (*dot_dual)(const double* a, const double* b, const double* c,
                       const double* d, std::size_t n);

    // out[i] = alpha*x[i]*b[i] - beta*c[i]   (three-term recurrence step)
    void (*recurrence_step)(double* out, const double* x, const double* b,
                            const double* c, double alpha, double beta,
                            std::size_t n);

    // v^T M v for symmetric row-major M (dim x dim, row stride ld)
    double (*quad_form)(const double* m, const double* v, std::size_t dim,
                        std::size_t ld);

    // u^T M v for row-major M (dim x dim, row stride ld)
    double (*bilinear)(const double* m, const double* u, const double* v,
                       std::size_t dim, std::size_t ld);

    // out[i] = re[i]^2 + im[i]^2
    void (*abs2)(double* out, const double* re, const double* im,
                 std::size_t n);

    // sum_i w[i]*p[i]*ln(p[i]), entries with p[i] <= kPlogpFloor skipped
    double (*weighted_plogp)(const double* w, const double* p, std::size_t n);
};

const Backend& scalar_backend();

/// Backend currently in effect. Resolution order: explicit select() call,
/// then the EPUR_KERNELS environment variable (scalar|avx2|neon|auto),
/// then the best lane the CPU supports.
const Backend& active();

/// Select a backend by name ("auto" re-runs detection). Throws
/// std::invalid_argument for unknown or unsupported names.
void select(const std::string& name);

/// Names of every backend usable on this machine (always includes "scalar").
std::vector<std::string> available();

} // namespace epur::kernels
