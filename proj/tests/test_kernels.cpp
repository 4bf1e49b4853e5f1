#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epur/kernels.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace epur;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n,
                               double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

} // namespace

TEST_CASE("backend listing always contains scalar") {
    const auto names = kernels::available();
    CHECK(std::find(names.begin(), names.end(), "scalar") != names.end());
}

TEST_CASE("select and restore backends") {
    kernels::select("scalar");
    CHECK(std::string(kernels::active().name) == "scalar");
    CHECK_THROWS_AS(kernels::select("bogus"), std::invalid_argument);
    kernels::select("auto");
}

TEST_CASE("all available backends agree with scalar") {
    std::mt19937_64 rng(1234);
    const auto& ref = kernels::scalar_backend();
    for (const auto& name : kernels::available()) {
        kernels::select(name);
        const auto& k = kernels::active();
        // Ragged lengths hit every remainder path.
        for (std::size_t n : {1u, 2u, 3u, 4u, 7u, 8u, 15u, 64u, 257u, 1000u}) {
            const auto a = random_vec(rng, n);
            const auto b = random_vec(rng, n);
            const auto c = random_vec(rng, n);
            const auto d = random_vec(rng, n);
            CHECK(k.dot(a.data(), b.data(), n) ==
                  doctest::Approx(ref.dot(a.data(), b.data(), n)).epsilon(1e-12));
            CHECK(k.dot_dual(a.data(), b.data(), c.data(), d.data(), n) ==
                  doctest::Approx(
                      ref.dot_dual(a.data(), b.data(), c.data(), d.data(), n))
                      .epsilon(1e-12));

            std::vector<double> out_k(n), out_ref(n);
            k.recurrence_step(out_k.data(), a.data(), b.data(), c.data(), 1.37,
                              0.74, n);
            ref.recurrence_step(out_ref.data(), a.data(), b.data(), c.data(),
                                1.37, 0.74, n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(out_k[i] == doctest::Approx(out_ref[i]).epsilon(1e-14));

            k.abs2(out_k.data(), a.data(), b.data(), n);
            ref.abs2(out_ref.data(), a.data(), b.data(), n);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(out_k[i] == doctest::Approx(out_ref[i]).epsilon(1e-14));
        }
        for (std::size_t dim : {1u, 3u, 5u, 8u, 33u}) {
            const auto m = random_vec(rng, dim * dim);
            const auto u = random_vec(rng, dim);
            const auto v = random_vec(rng, dim);
            CHECK(k.quad_form(m.data(), v.data(), dim, dim) ==
                  doctest::Approx(ref.quad_form(m.data(), v.data(), dim, dim))
                      .epsilon(1e-12));
            CHECK(k.bilinear(m.data(), u.data(), v.data(), dim, dim) ==
                  doctest::Approx(
                      ref.bilinear(m.data(), u.data(), v.data(), dim, dim))
                      .epsilon(1e-12));
        }
        {
            // weighted p*log(p) sum including zeros and sub-floor entries
            std::mt19937_64 prng(99);
            std::vector<double> p = random_vec(prng, 1003, 0.0, 2.0);
            p[0] = 0.0;
            p[5] = 1e-310;
            p[17] = -3.0e-13;
            const auto w = random_vec(prng, 1003, 0.0, 1.0);
            CHECK(k.weighted_plogp(w.data(), p.data(), p.size()) ==
                  doctest::Approx(ref.weighted_plogp(w.data(), p.data(), p.size()))
                      .epsilon(1e-12));
        }
    }
    kernels::select("auto");
}

TEST_CASE("weighted_plogp matches closed form on a flat block") {
    const auto& k = kernels::active();
    std::vector<double> p(400, 0.5), w(400, 1.0);
    // sum w p ln p = 400 * 0.5 * ln 0.5
    CHECK(k.weighted_plogp(w.data(), p.data(), p.size()) ==
          doctest::Approx(400 * 0.5 * std::log(0.5)).epsilon(1e-13));
}
