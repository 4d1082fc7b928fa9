#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace lll::bitops {

// Kernels over arrays of 64-bit words. These are the inner loops of every
// event-algebra operation: the subset sweeps in the dependency-graph checkers
// issue millions of AND/OR/popcount passes over outcome bitsets, so they get
// scalar reference implementations plus SIMD variants selected at runtime.
//
// Contracts (all kernels):
//  - `dst`, `a`, `b` point to at least `nwords` words; `dst` may alias `a` or `b`.
//  - counting kernels return the population count of the combined words.
//  - every backend computes bit-identical results; the scalar table is the
//    reference the others are equivalence-tested against.
struct Kernels {
    void (*bit_or)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    void (*bit_and)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    void (*bit_andnot)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords); // dst = a & ~b
    void (*bit_not)(std::uint64_t* dst, const std::uint64_t* a, std::size_t nwords);
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t nwords);
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);    // |a & b|
    std::uint64_t (*andnot_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords); // |a & ~b|
    std::uint64_t (*or_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);     // |a | b|
};

enum class Backend {
    scalar,
    avx2,
    neon,
};

std::string_view backend_name(Backend backend);

// Compiled-in and usable on this CPU.
bool backend_available(Backend backend);

// The backend behind kernels(). Defaults to the best available one; the
// LLLKIT_BITOPS environment variable (scalar|avx2|neon) overrides the choice
// at startup, set_backend() overrides it programmatically.
Backend active_backend();
void set_backend(Backend backend); // throws DomainError if unavailable

const Kernels& kernels();
const Kernels& kernels(Backend backend); // throws DomainError if unavailable

// Defined by the scalar translation unit; other backends are registered only
// when compiled in.
const Kernels& scalar_kernels();

#if defined(__x86_64__) || defined(_M_X64)
#define LLLKIT_HAVE_AVX2_KERNELS 1
const Kernels& avx2_kernels();
#endif

#if defined(__aarch64__)
#define LLLKIT_HAVE_NEON_KERNELS 1
const Kernels& neon_kernels();
#endif

} // namespace lll::bitops
