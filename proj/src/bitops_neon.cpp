// NEON variants of the word-array kernels (aarch64 only, where NEON is
// baseline so no runtime check is needed beyond the architecture itself).

#include "lll/bitops.hpp"

#if defined(LLLKIT_HAVE_NEON_KERNELS)

#include <arm_neon.h>

#include <bit>

namespace lll::bitops {

namespace {

inline std::uint64_t popcount128(uint8x16_t v) {
    return vaddvq_u64(vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
}

template <typename Combine>
inline void binary_op(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                      std::size_t n, Combine combine) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t va = vld1q_u64(a + i);
        uint64x2_t vb = vld1q_u64(b + i);
        vst1q_u64(dst + i, combine(va, vb));
    }
    for (; i < n; ++i) dst[i] = combine(a[i], b[i]);
}

template <typename Combine>
inline std::uint64_t counted_op(const std::uint64_t* a, const std::uint64_t* b, std::size_t n,
                                Combine combine) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t va = vld1q_u64(a + i);
        uint64x2_t vb = vld1q_u64(b + i);
        total += popcount128(vreinterpretq_u8_u64(combine(va, vb)));
    }
    for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(combine(a[i], b[i])));
    return total;
}

struct OrOp {
    uint64x2_t operator()(uint64x2_t x, uint64x2_t y) const { return vorrq_u64(x, y); }
    std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const { return x | y; }
};
struct AndOp {
    uint64x2_t operator()(uint64x2_t x, uint64x2_t y) const { return vandq_u64(x, y); }
    std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const { return x & y; }
};
struct AndNotOp {
    // vbicq computes x & ~y directly.
    uint64x2_t operator()(uint64x2_t x, uint64x2_t y) const { return vbicq_u64(x, y); }
    std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const { return x & ~y; }
};

void neon_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    binary_op(dst, a, b, n, OrOp{});
}
void neon_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    binary_op(dst, a, b, n, AndOp{});
}
void neon_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    binary_op(dst, a, b, n, AndNotOp{});
}

void neon_not(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t va = vreinterpretq_u8_u64(vld1q_u64(a + i));
        vst1q_u64(dst + i, vreinterpretq_u64_u8(vmvnq_u8(va)));
    }
    for (; i < n; ++i) dst[i] = ~a[i];
}

std::uint64_t neon_popcount(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        total += popcount128(vreinterpretq_u8_u64(vld1q_u64(a + i)));
    }
    for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

std::uint64_t neon_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return counted_op(a, b, n, AndOp{});
}
std::uint64_t neon_andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return counted_op(a, b, n, AndNotOp{});
}
std::uint64_t neon_or_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return counted_op(a, b, n, OrOp{});
}

} // namespace

const Kernels& neon_kernels() {
    static const Kernels table = {
        neon_or,
        neon_and,
        neon_andnot,
        neon_not,
        neon_popcount,
        neon_and_popcount,
        neon_andnot_popcount,
        neon_or_popcount,
    };
    return table;
}

} // namespace lll::bitops

#endif // LLLKIT_HAVE_NEON_KERNELS
