#include "lll/combinatorics.hpp"

namespace lll {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= BigInt(n - k + i);
        result /= BigInt(i);
    }
    return result;
}

BigInt factorial(std::uint64_t n) {
    BigInt result = 1;
    for (std::uint64_t i = 2; i <= n; ++i) result *= BigInt(i);
    return result;
}

BigInt falling_factorial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result *= BigInt(n - i);
    }
    return result;
}

BigInt injection_count(unsigned m, unsigned n) {
    return falling_factorial(n, m);
}

} // namespace lll
