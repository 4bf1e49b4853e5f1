#include "epur/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace epur::kernels {

#if defined(__x86_64__) || defined(_M_X64)
const Backend& avx2_backend();
#endif
#if defined(__aarch64__)
const Backend& neon_backend();
#endif

namespace {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Backend* detect_best() {
#if defined(__aarch64__)
    return &neon_backend();
#elif defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) return &avx2_backend();
    return &scalar_backend();
#else
    return &scalar_backend();
#endif
}

const Backend* lookup(const std::string& name) {
    if (name == "auto") return detect_best();
    if (name == "scalar") return &scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2") {
        if (!avx2_supported())
            throw std::invalid_argument("kernel backend 'avx2' not supported by this CPU");
        return &avx2_backend();
    }
#endif
#if defined(__aarch64__)
    if (name == "neon") return &neon_backend();
#endif
    throw std::invalid_argument("unknown kernel backend '" + name + "'");
}

const Backend* initial() {
    if (const char* env = std::getenv("EPUR_KERNELS")) return lookup(env);
    return detect_best();
}

std::atomic<const Backend*>& slot() {
    static std::atomic<const Backend*> current{initial()};
    return current;
}

} // namespace

const Backend& active() { return *slot().load(std::memory_order_acquire); }

void select(const std::string& name) {
    slot().store(lookup(name), std::memory_order_release);
}

std::vector<std::string> available() {
    std::vector<std::string> names{"scalar"};
    if (avx2_supported()) names.emplace_back("avx2");
#if defined(__aarch64__)
    names.emplace_back("neon");
#endif
    return names;
}

} // namespace epur::kernels
