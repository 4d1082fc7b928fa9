#include "lll/latin.hpp"

#include "lll/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace lll {

IntMatrix::IntMatrix(std::size_t n, std::vector<long long> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw DomainError("matrix dimension must be at least 1");
    if (entries_.size() != n_ * n_)
        throw DomainError("matrix needs n*n entries");
}

long long IntMatrix::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw DomainError("matrix index out of range");
    return entries_[(i - 1) * n_ + (j - 1)];
}

std::size_t max_multiplicity(const IntMatrix& a) {
    std::unordered_map<long long, std::size_t> counts;
    const std::size_t n = a.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            best = std::max(best, ++counts[a.at(i, j)]);
        }
    }
    return best;
}

TriState transversal_condition(std::size_t n, std::size_t k, const EInterval& e) {
    if (n < 1) throw DomainError("matrix dimension must be at least 1");
    Rational lhs_scale(BigInt(4) * BigInt(k));
    Rational rhs(BigInt(n) - 1);
    if (e.upper * lhs_scale <= rhs) return TriState::holds;
    if (e.lower * lhs_scale > rhs) return TriState::fails;
    return TriState::indeterminate;
}

LatinEventFamily build_latin_events(const IntMatrix& a) {
    const std::size_t n = a.size();
    LatinEventFamily family;
    family.n = n;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t i2 = i + 1; i2 <= n; ++i2) {
            for (std::size_t j = 1; j <= n; ++j) {
                for (std::size_t j2 = 1; j2 <= n; ++j2) {
                    if (j2 == j) continue;
                    if (a.at(i, j) != a.at(i2, j2)) continue;
                    family.pairs.push_back({i, i2, j, j2});
                    family.matchings.push_back(
                        Matching::from_pairs(n, n, {{i, j}, {i2, j2}}));
                }
            }
        }
    }
    return family;
}

bool is_latin_transversal(const IntMatrix& a, const std::vector<std::size_t>& pi) {
    const std::size_t n = a.size();
    if (pi.size() != n) throw DomainError("permutation length does not match the matrix");
    std::vector<bool> seen(n + 1, false);
    for (std::size_t v : pi) {
        if (v < 1 || v > n || seen[v]) throw DomainError("pi is not a permutation of [n]");
        seen[v] = true;
    }
    std::set<long long> symbols;
    for (std::size_t i = 1; i <= n; ++i) {
        if (!symbols.insert(a.at(i, pi[i - 1])).second) return false;
    }
    return true;
}

} // namespace lll
