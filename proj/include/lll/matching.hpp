#pragma once

#include "lll/graph.hpp"
#include "lll/rational.hpp"
#include "lll/space.hpp"

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace lll {

// A partial injection: a bijection f from a subset S of the domain [m] onto a
// subset T of the codomain [n], stored as pairs sorted by domain point. The
// ambient sizes (m, n) travel with the matching so cross-instance operations
// can be rejected.
class Matching {
public:
    using Pair = std::pair<std::size_t, std::size_t>; // (domain point, image)

    // Validates the triple; each failure mode raises a ValidationError with
    // its own kind: |S| != |T|, f not a total map on S, f not injective, or
    // image(f) != T.
    static Matching make(std::size_t domain_size, std::size_t codomain_size,
                         const std::vector<std::size_t>& s, const std::vector<std::size_t>& t,
                         const std::vector<Pair>& f);

    // Convenience: S and T inferred from the pairs.
    static Matching from_pairs(std::size_t domain_size, std::size_t codomain_size,
                               const std::vector<Pair>& f);

    std::size_t domain_size() const { return m_; }
    std::size_t codomain_size() const { return n_; }
    std::size_t size() const { return pairs_.size(); } // r = |S|

    const std::vector<Pair>& pairs() const { return pairs_; } // sorted by domain point
    const std::vector<Pair>& inverse_pairs() const { return inverse_; } // sorted by image
    std::vector<std::size_t> domain() const;  // sorted S
    std::vector<std::size_t> image() const;   // sorted T

    bool operator==(const Matching& other) const = default;
    auto operator<=>(const Matching& other) const = default;

private:
    Matching(std::size_t m, std::size_t n, std::vector<Pair> pairs);

    std::size_t m_ = 0;
    std::size_t n_ = 0;
    std::vector<Pair> pairs_;
    std::vector<Pair> inverse_;
};

// Two matchings conflict when they disagree on a shared domain point or a
// shared image point, i.e. when they cannot be combined into one larger
// matching. Tested by a sorted merge over the pair lists. Throws DomainError
// when the ambient sizes differ.
bool conflicts(const Matching& a, const Matching& b);

// Graph on [matchings.size()] (1-based) whose edges are the conflicting
// pairs. `threads` > 1 splits the pair loop; the result is identical.
Graph conflict_graph(const std::vector<Matching>& matchings, std::size_t threads = 1);

// Rebases the matching along a permutation rho of the codomain (rho[k-1] is
// the image of k): (S, T, f) becomes (S, rho(T), rho∘f).
Matching apply_permutation(const std::vector<std::size_t>& rho, const Matching& matching);

// The event of all injections extending the matching, materialized by
// filtering the space and cross-checked against the closed-form cardinality
// C(n-r, m-r)·(m-r)!.
struct CanonicalEvent {
    Matching matching;
    std::uint64_t space_id;
    Event realized;
};

CanonicalEvent canonical_event(const SampleSpace& space, const Matching& matching);

// P(canonical event) = C(n-r,m-r)·(m-r)! / (C(n,m)·m!) in lowest terms, which
// simplifies to 1/(n·(n-1)···(n-r+1)). Throws DomainError unless
// 0 <= r <= m <= n and m >= 1.
Rational canonical_event_probability(std::size_t m, std::size_t n, std::size_t r);

} // namespace lll
