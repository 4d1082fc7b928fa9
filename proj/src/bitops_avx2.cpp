// AVX2 variants of the word-array kernels. This translation unit is compiled
// with -mavx2 and must only be reached after a runtime CPU check.

#include "lll/bitops.hpp"

#if defined(LLLKIT_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <bit>

namespace lll::bitops {

namespace {

// Per-byte popcount via the nibble lookup table, summed into four 64-bit
// lanes with SAD against zero.
inline __m256i popcount256(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::uint64_t reduce_lanes(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

template <typename Combine>
inline void binary_op(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t n, Combine combine) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), combine(va, vb));
    }
    for (; i < n; ++i) dst[i] = combine(a[i], b[i]);
}

template <typename Combine>
inline std::uint64_t counted_op(const std::uint64_t* a, const std::uint64_t* b, std::size_t n,
                                Combine combine) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount256(combine(va, vb)));
    }
    std::uint64_t total = reduce_lanes(acc);
    for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(combine(a[i], b[i])));
    return total;
}

struct OrOp {
    __m256i operator()(__m256i x, __m256i y) const { return _mm256_or_si256(x, y); }
    std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const { return x | y; }
};
struct AndOp {
    __m256i operator()(__m256i x, __m256i y) const { return _mm256_and_si256(x, y); }
    std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const { return x & y; }
};
struct AndNotOp {
    // _mm256_andnot_si256 computes (~x) & y, so swap to get x & ~y.
    __m256i operator()(__m256i x, __m256i y) const { return _mm256_andnot_si256(y, x); }
    std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const { return x & ~y; }
};

void avx2_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    binary_op(dst, a, b, n, OrOp{});
}
void avx2_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    binary_op(dst, a, b, n, AndOp{});
}
void avx2_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    binary_op(dst, a, b, n, AndNotOp{});
}

void avx2_not(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
    const __m256i ones = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(va, ones));
    }
    for (; i < n; ++i) dst[i] = ~a[i];
}

std::uint64_t avx2_popcount(const std::uint64_t* a, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount256(va));
    }
    std::uint64_t total = reduce_lanes(acc);
    for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

std::uint64_t avx2_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return counted_op(a, b, n, AndOp{});
}
std::uint64_t avx2_andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return counted_op(a, b, n, AndNotOp{});
}
std::uint64_t avx2_or_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return counted_op(a, b, n, OrOp{});
}

} // namespace

const Kernels& avx2_kernels() {
    static const Kernels table = {
        avx2_or,
        avx2_and,
        avx2_andnot,
        avx2_not,
        avx2_popcount,
        avx2_and_popcount,
        avx2_andnot_popcount,
        avx2_or_popcount,
    };
    return table;
}

} // namespace lll::bitops

#endif // LLLKIT_HAVE_AVX2_KERNELS
