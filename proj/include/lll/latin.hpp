#pragma once

#include "lll/lll.hpp"
#include "lll/matching.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace lll {

// Square matrix of arbitrary integer symbols, 1-based in both coordinates.
class IntMatrix {
public:
    IntMatrix(std::size_t n, std::vector<long long> entries); // row-major, n*n values

    std::size_t size() const { return n_; }
    long long at(std::size_t i, std::size_t j) const; // 1-based

private:
    std::size_t n_;
    std::vector<long long> entries_;
};

// k = the largest number of cells sharing one symbol.
std::size_t max_multiplicity(const IntMatrix& a);

// The sufficient condition 4k·e <= n-1 for a Latin transversal, decided
// against the e-enclosure.
TriState transversal_condition(std::size_t n, std::size_t k, const EInterval& e = EInterval());

// One entry per pair of cells in distinct rows and distinct columns holding
// the same symbol: rows i < i', columns j != j' with a(i,j) = a(i',j'). The
// oriented column pair (j, j') records which cell sits in which row, and the
// matching {i -> j, i' -> j'} generates the event of permutations hitting
// both cells. Tuples are enumerated in lexicographic (i, i', j, j') order.
struct LatinEventFamily {
    std::size_t n = 0;
    std::vector<std::array<std::size_t, 4>> pairs; // (i, i', j, j')
    std::vector<Matching> matchings;               // over (n, n)
};

LatinEventFamily build_latin_events(const IntMatrix& a);

// True iff the entries a(i, pi(i)) are pairwise distinct. pi is 1-based
// (pi[i-1] is the image of row i) and must be a permutation of [n].
bool is_latin_transversal(const IntMatrix& a, const std::vector<std::size_t>& pi);

} // namespace lll
