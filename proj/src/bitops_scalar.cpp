#include <bit>

#include "lll/bitops.hpp"

namespace lll::bitops {

namespace {

void scalar_or(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void scalar_and(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void scalar_andnot(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & ~b[i];
}

void scalar_not(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = ~a[i];
}

std::uint64_t scalar_popcount(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
    return total;
}

std::uint64_t scalar_and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::uint64_t scalar_andnot_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & ~b[i]));
    return total;
}

std::uint64_t scalar_or_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] | b[i]));
    return total;
}

} // namespace

const Kernels& scalar_kernels() {
    static const Kernels table = {
        scalar_or,
        scalar_and,
        scalar_andnot,
        scalar_not,
        scalar_popcount,
        scalar_and_popcount,
        scalar_andnot_popcount,
        scalar_or_popcount,
    };
    return table;
}

} // namespace lll::bitops
