// Micro-benchmark for the kernel backends: times each inner-loop kernel on
// representative sizes and prints throughput per backend.

#include "epur/kernels.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

using namespace epur;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n,
                               double lo = 0.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

template <typename F>
double time_loop(F&& fn, int reps) {
    // One warm-up pass, then the timed repetitions.
    fn();
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

} // namespace

int main() {
    std::mt19937_64 rng(2024);
    const std::size_t n = 2048;
    const std::size_t dim = 64;
    const int reps = 4000;

    const auto a = random_vec(rng, n);
    const auto b = random_vec(rng, n);
    const auto c = random_vec(rng, n);
    const auto d = random_vec(rng, n);
    const auto m = random_vec(rng, dim * dim);
    const auto u = random_vec(rng, dim);
    const auto v = random_vec(rng, dim);
    const auto w = random_vec(rng, n, 0.0, 1.0);
    const auto p = random_vec(rng, n, 1e-6, 2.0);
    std::vector<double> out(n);

    double sink = 0.0;
    std::printf("%-8s %14s %14s %14s %14s %14s\n", "backend", "dot GF/s",
                "dot_dual GF/s", "bilinear GF/s", "recur GB/s", "plogp Melem/s");
    for (const auto& name : kernels::available()) {
        kernels::select(name);
        const auto& k = kernels::active();

        const double t_dot =
            time_loop([&] { sink = sink + k.dot(a.data(), b.data(), n); }, reps);
        const double t_dual = time_loop(
            [&] { sink = sink + k.dot_dual(a.data(), b.data(), c.data(), d.data(), n); },
            reps);
        const double t_bil = time_loop(
            [&] { sink = sink + k.bilinear(m.data(), u.data(), v.data(), dim, dim); },
            reps * 4);
        const double t_rec = time_loop(
            [&] {
                k.recurrence_step(out.data(), a.data(), b.data(), c.data(), 1.1,
                                  0.7, n);
                sink = sink + out[0];
            },
            reps);
        const double t_plogp = time_loop(
            [&] { sink = sink + k.weighted_plogp(w.data(), p.data(), n); }, reps);

        std::printf("%-8s %14.2f %14.2f %14.2f %14.2f %14.1f\n", name.c_str(),
                    2.0 * n / t_dot * 1e-9, 4.0 * n / t_dual * 1e-9,
                    2.0 * dim * dim / t_bil * 1e-9,
                    5.0 * 8.0 * n / t_rec * 1e-9, n / t_plogp * 1e-6);
    }
    kernels::select("auto");
    return sink == 42.0 ? 1 : 0; // keep the sink alive
}
