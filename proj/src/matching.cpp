#include "lll/matching.hpp"

#include "lll/combinatorics.hpp"
#include "lll/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace lll {

Matching::Matching(std::size_t m, std::size_t n, std::vector<Pair> pairs)
    : m_(m), n_(n), pairs_(std::move(pairs)), inverse_(pairs_) {
    std::sort(pairs_.begin(), pairs_.end());
    std::sort(inverse_.begin(), inverse_.end(),
              [](const Pair& a, const Pair& b) { return a.second < b.second; });
    // keep inverse_ as (domain, image) but ordered by image
}

Matching Matching::make(std::size_t domain_size, std::size_t codomain_size,
                        const std::vector<std::size_t>& s, const std::vector<std::size_t>& t,
                        const std::vector<Pair>& f) {
    using Kind = ValidationError::Kind;
    if (s.size() != t.size())
        throw ValidationError(Kind::size_mismatch, "matching needs |S| = |T|, got " +
                                                       std::to_string(s.size()) + " and " +
                                                       std::to_string(t.size()));

    std::set<std::size_t> s_set(s.begin(), s.end());
    std::set<std::size_t> t_set(t.begin(), t.end());
    if (s_set.size() != s.size() || t_set.size() != t.size())
        throw ValidationError(Kind::bad_domain, "S and T must not repeat elements");
    for (std::size_t v : s_set) {
        if (v < 1 || v > domain_size)
            throw ValidationError(Kind::bad_domain, "S contains a point outside the domain");
    }
    for (std::size_t v : t_set) {
        if (v < 1 || v > codomain_size)
            throw ValidationError(Kind::image_mismatch, "T contains a point outside the codomain");
    }

    std::set<std::size_t> covered;
    for (const Pair& pr : f) {
        if (!s_set.count(pr.first))
            throw ValidationError(Kind::bad_domain,
                                  "f maps a point not in S: " + std::to_string(pr.first));
        if (!covered.insert(pr.first).second)
            throw ValidationError(Kind::bad_domain,
                                  "f maps domain point " + std::to_string(pr.first) + " twice");
    }
    if (covered.size() != s_set.size())
        throw ValidationError(Kind::bad_domain, "f is not defined on all of S");

    std::set<std::size_t> images;
    for (const Pair& pr : f) {
        if (!images.insert(pr.second).second)
            throw ValidationError(Kind::not_injective,
                                  "two domain points share the image " + std::to_string(pr.second));
    }
    if (images != t_set)
        throw ValidationError(Kind::image_mismatch, "image of f is not exactly T");

    return Matching(domain_size, codomain_size, f);
}

Matching Matching::from_pairs(std::size_t domain_size, std::size_t codomain_size,
                              const std::vector<Pair>& f) {
    std::vector<std::size_t> s, t;
    for (const Pair& pr : f) {
        s.push_back(pr.first);
        t.push_back(pr.second);
    }
    std::sort(t.begin(), t.end());
    return make(domain_size, codomain_size, s, t, f);
}

std::vector<std::size_t> Matching::domain() const {
    std::vector<std::size_t> result;
    result.reserve(pairs_.size());
    for (const Pair& pr : pairs_) result.push_back(pr.first);
    return result;
}

std::vector<std::size_t> Matching::image() const {
    std::vector<std::size_t> result;
    result.reserve(inverse_.size());
    for (const Pair& pr : inverse_) result.push_back(pr.second);
    return result;
}

bool conflicts(const Matching& a, const Matching& b) {
    if (a.domain_size() != b.domain_size() || a.codomain_size() != b.codomain_size())
        throw DomainError("matchings live over different ambient sets");

    // Shared domain point with different images?
    {
        const auto& pa = a.pairs();
        const auto& pb = b.pairs();
        std::size_t ia = 0, ib = 0;
        while (ia < pa.size() && ib < pb.size()) {
            if (pa[ia].first < pb[ib].first) {
                ++ia;
            } else if (pb[ib].first < pa[ia].first) {
                ++ib;
            } else {
                if (pa[ia].second != pb[ib].second) return true;
                ++ia;
                ++ib;
            }
        }
    }
    // Shared image point with different preimages?
    {
        const auto& pa = a.inverse_pairs();
        const auto& pb = b.inverse_pairs();
        std::size_t ia = 0, ib = 0;
        while (ia < pa.size() && ib < pb.size()) {
            if (pa[ia].second < pb[ib].second) {
                ++ia;
            } else if (pb[ib].second < pa[ia].second) {
                ++ib;
            } else {
                if (pa[ia].first != pb[ib].first) return true;
                ++ia;
                ++ib;
            }
        }
    }
    return false;
}

Graph conflict_graph(const std::vector<Matching>& matchings, std::size_t threads) {
    const std::size_t k = matchings.size();
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    if (threads <= 1 || k < 64) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (conflicts(matchings[i], matchings[j])) edges.emplace_back(i + 1, j + 1);
    } else {
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> partial(threads);
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                // Strided rows balance the triangular loop across workers.
                for (std::size_t i = t; i < k; i += threads)
                    for (std::size_t j = i + 1; j < k; ++j)
                        if (conflicts(matchings[i], matchings[j]))
                            partial[t].emplace_back(i + 1, j + 1);
            });
        }
        for (auto& w : workers) w.join();
        for (auto& chunk : partial) edges.insert(edges.end(), chunk.begin(), chunk.end());
        std::sort(edges.begin(), edges.end());
    }
    return Graph(k, edges);
}

Matching apply_permutation(const std::vector<std::size_t>& rho, const Matching& matching) {
    const std::size_t n = matching.codomain_size();
    if (rho.size() != n) throw DomainError("permutation length does not match codomain size");
    std::vector<bool> seen(n + 1, false);
    for (std::size_t v : rho) {
        if (v < 1 || v > n || seen[v]) throw DomainError("rho is not a permutation of the codomain");
        seen[v] = true;
    }
    std::vector<Matching::Pair> remapped;
    remapped.reserve(matching.size());
    for (const auto& [dom, img] : matching.pairs()) remapped.emplace_back(dom, rho[img - 1]);
    return Matching::from_pairs(matching.domain_size(), n, remapped);
}

CanonicalEvent canonical_event(const SampleSpace& space, const Matching& matching) {
    if (matching.domain_size() != space.domain_size() ||
        matching.codomain_size() != space.codomain_size())
        throw DomainError("matching ambient sets do not match the sample space");

    const auto& pairs = matching.pairs();
    Event realized = space.event_where([&](std::span<const std::uint32_t> image) {
        for (const auto& [dom, img] : pairs) {
            if (image[dom - 1] != img) return false;
        }
        return true;
    });

    const std::size_t m = space.domain_size();
    const std::size_t n = space.codomain_size();
    const std::size_t r = matching.size();
    BigInt expected = binomial(n - r, m - r) * factorial(m - r);
    if (BigInt(realized.size()) != expected)
        throw std::logic_error("canonical event cardinality disagrees with the closed form");

    return CanonicalEvent{matching, space.id(), std::move(realized)};
}

Rational canonical_event_probability(std::size_t m, std::size_t n, std::size_t r) {
    if (m < 1 || m > n) throw DomainError("need 1 <= m <= n");
    if (r > m) throw DomainError("matching size r cannot exceed the domain size");
    BigInt numer = binomial(n - r, m - r) * factorial(m - r);
    BigInt denom = binomial(n, m) * factorial(m);
    return make_rational(numer, denom);
}

} // namespace lll
