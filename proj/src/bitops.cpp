#include "lll/bitops.hpp"

#include "lll/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace lll::bitops {

namespace {

Backend detect_default() {
    if (const char* env = std::getenv("LLLKIT_BITOPS")) {
        std::string_view want(env);
        for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
            if (want == backend_name(b) && backend_available(b)) return b;
        }
        // Unknown or unavailable request in the environment: fall through to
        // auto-detection rather than failing at static-init time.
    }
#if defined(LLLKIT_HAVE_AVX2_KERNELS)
    if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
#if defined(LLLKIT_HAVE_NEON_KERNELS)
    return Backend::neon;
#endif
    return Backend::scalar;
}

std::atomic<Backend>& active_slot() {
    static std::atomic<Backend> slot{detect_default()};
    return slot;
}

std::string describe(const char* prefix, Backend b) {
    std::string msg(prefix);
    msg.append(backend_name(b));
    return msg;
}

} // namespace

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "unknown";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(LLLKIT_HAVE_AVX2_KERNELS)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Backend::neon:
#if defined(LLLKIT_HAVE_NEON_KERNELS)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return active_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_available(b)) {
        throw DomainError(describe("bit-kernel backend not available on this machine: ", b));
    }
    active_slot().store(b, std::memory_order_relaxed);
}

const Kernels& kernels(Backend b) {
    switch (b) {
        case Backend::scalar:
            return scalar_kernels();
        case Backend::avx2:
#if defined(LLLKIT_HAVE_AVX2_KERNELS)
            return avx2_kernels();
#else
            break;
#endif
        case Backend::neon:
#if defined(LLLKIT_HAVE_NEON_KERNELS)
            return neon_kernels();
#else
            break;
#endif
    }
    throw DomainError(describe("bit-kernel backend not compiled in: ", b));
}

const Kernels& kernels() { return kernels(active_backend()); }

} // namespace lll::bitops
