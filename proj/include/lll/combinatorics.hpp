#pragma once

#include <cstdint>

#include "lll/rational.hpp"

namespace lll {

// C(n, k); 0 when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

// n!
BigInt factorial(std::uint64_t n);

// n * (n-1) * ... * (n-k+1); 1 when k == 0, 0 when k > n.
BigInt falling_factorial(std::uint64_t n, std::uint64_t k);

// Number of injections from an m-set into an n-set, i.e. falling_factorial(n, m).
BigInt injection_count(unsigned m, unsigned n);

} // namespace lll
