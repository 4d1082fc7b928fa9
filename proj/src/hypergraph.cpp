#include "lll/hypergraph.hpp"

#include "lll/combinatorics.hpp"
#include "lll/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace lll {

Hypergraph::Hypergraph(std::size_t vertex_count, std::size_t r,
                       std::vector<std::vector<std::size_t>> edges)
    : vertex_count_(vertex_count), r_(r), edges_(std::move(edges)) {
    if (r_ < 1) throw DomainError("edge cardinality must be at least 1");
    if (r_ > vertex_count_) throw DomainError("edge cardinality exceeds the vertex count");
    for (auto& edge : edges_) {
        if (edge.size() != r_)
            throw DomainError("edge has " + std::to_string(edge.size()) + " vertices, expected " +
                              std::to_string(r_));
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw DomainError("edge repeats a vertex");
        if (edge.front() < 1 || edge.back() > vertex_count_)
            throw DomainError("edge vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("duplicate edge");
}

Hypergraph Hypergraph::complete(std::size_t vertex_count, std::size_t r) {
    std::vector<std::vector<std::size_t>> edges;
    std::vector<std::size_t> edge(r);
    std::iota(edge.begin(), edge.end(), 1);
    while (true) {
        edges.push_back(edge);
        // next r-combination of [1..vertex_count] in lexicographic order
        std::size_t i = r;
        while (i > 0 && edge[i - 1] == vertex_count - (r - i)) --i;
        if (i == 0) break;
        ++edge[i - 1];
        for (std::size_t j = i; j < r; ++j) edge[j] = edge[j - 1] + 1;
    }
    return Hypergraph(vertex_count, r, std::move(edges));
}

std::size_t Hypergraph::degree(std::size_t v) const {
    if (v < 1 || v > vertex_count_) throw DomainError("vertex out of range");
    std::size_t result = 0;
    for (const auto& edge : edges_)
        if (std::binary_search(edge.begin(), edge.end(), v)) ++result;
    return result;
}

std::size_t Hypergraph::min_degree() const {
    std::vector<std::size_t> deg(vertex_count_ + 1, 0);
    for (const auto& edge : edges_)
        for (std::size_t v : edge) ++deg[v];
    std::size_t result = edges_.size(); // upper bound on any degree
    for (std::size_t v = 1; v <= vertex_count_; ++v) result = std::min(result, deg[v]);
    return result;
}

bool Hypergraph::has_edge(const std::vector<std::size_t>& sorted_vertices) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_vertices);
}

std::size_t Hypergraph::edge_intersection_degree(std::size_t edge_index) const {
    if (edge_index >= edges_.size()) throw DomainError("edge index out of range");
    const auto& edge = edges_[edge_index];
    std::size_t result = 0;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
        if (j == edge_index) continue;
        const auto& other = edges_[j];
        bool meets = false;
        std::size_t a = 0, b = 0;
        while (a < edge.size() && b < other.size()) {
            if (edge[a] < other[b]) {
                ++a;
            } else if (other[b] < edge[a]) {
                ++b;
            } else {
                meets = true;
                break;
            }
        }
        if (meets) ++result;
    }
    return result;
}

std::size_t Hypergraph::max_edge_intersection_degree() const {
    std::size_t result = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        result = std::max(result, edge_intersection_degree(i));
    return result;
}

Hypergraph Hypergraph::complement() const {
    Hypergraph full = complete(vertex_count_, r_);
    std::vector<std::vector<std::size_t>> edges;
    std::set_difference(full.edges_.begin(), full.edges_.end(), edges_.begin(), edges_.end(),
                        std::back_inserter(edges));
    return Hypergraph(vertex_count_, r_, std::move(edges));
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, std::size_t vertex_cap) {
    if (a.vertex_count() != b.vertex_count() || a.uniformity() != b.uniformity() ||
        a.edge_count() != b.edge_count())
        return false;
    if (a.vertex_count() > vertex_cap)
        throw SizeLimitError(a.vertex_count(), vertex_cap,
                             "isomorphism search is brute-force and capped at " +
                                 std::to_string(vertex_cap) + " vertices");
    std::vector<std::size_t> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool match = true;
        std::vector<std::size_t> mapped;
        for (const auto& edge : a.edges()) {
            mapped.clear();
            for (std::size_t v : edge) mapped.push_back(perm[v - 1]);
            std::sort(mapped.begin(), mapped.end());
            if (!b.has_edge(mapped)) {
                match = false;
                break;
            }
        }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

PackingInstance build_packing_instance(const Hypergraph& h1, const Hypergraph& h2, std::size_t n,
                                       std::uint64_t matching_cap) {
    if (h1.uniformity() != h2.uniformity())
        throw DomainError("hypergraphs must have the same uniformity");
    if (h1.vertex_count() > n)
        throw DomainError("host is smaller than the first hypergraph's vertex set");
    if (h2.vertex_count() > n) throw DomainError("second hypergraph does not fit inside the host");

    const std::size_t r = h1.uniformity();
    BigInt total = BigInt(h1.edge_count()) * BigInt(h2.edge_count()) * factorial(r);
    if (total > BigInt(matching_cap))
        throw SizeLimitError(total.convert_to<std::uint64_t>(), matching_cap,
                             "packing instance needs " + total.str() + " matchings, cap is " +
                                 std::to_string(matching_cap));

    PackingInstance instance{h1, h2, n, {}, h1.edge_count(), h2.edge_count(),
                             h1.max_edge_intersection_degree(),
                             h2.max_edge_intersection_degree()};
    instance.event_matchings.reserve(total.convert_to<std::size_t>());
    const std::size_t m = h1.vertex_count();
    for (const auto& f1 : h1.edges()) {
        for (const auto& f2 : h2.edges()) {
            // All bijections f1 -> f2, in lexicographic order of the image
            // sequence against the sorted f1.
            std::vector<std::size_t> image = f2; // already sorted
            do {
                std::vector<Matching::Pair> pairs;
                pairs.reserve(r);
                for (std::size_t idx = 0; idx < r; ++idx) pairs.emplace_back(f1[idx], image[idx]);
                instance.event_matchings.push_back(Matching::from_pairs(m, n, pairs));
            } while (std::next_permutation(image.begin(), image.end()));
        }
    }
    return instance;
}

TriState packing_condition(const Hypergraph& h1, const Hypergraph& h2, std::size_t n,
                           const EInterval& e) {
    if (h1.uniformity() != h2.uniformity())
        throw DomainError("hypergraphs must have the same uniformity");
    if (h2.vertex_count() > n) throw DomainError("second hypergraph does not fit inside the host");
    const std::size_t r = h1.uniformity();
    if (n < r) throw DomainError("host is too small for the uniformity");

    BigInt d1(h1.max_edge_intersection_degree());
    BigInt d2(h2.max_edge_intersection_degree());
    BigInt lhs = (d1 + 1) * BigInt(h2.edge_count()) + (d2 + 1) * BigInt(h1.edge_count());
    Rational capacity(binomial(n, r));
    // lhs < (1/e)·C(n,r)  <=>  lhs·e < C(n,r)
    if (Rational(lhs) * e.upper < capacity) return TriState::holds;
    if (Rational(lhs) * e.lower >= capacity) return TriState::fails;
    return TriState::indeterminate;
}

PerfectPackingReduction perfect_packing_reduction(const Hypergraph& g, const Hypergraph& h) {
    if (g.uniformity() != h.uniformity())
        throw DomainError("hypergraphs must have the same uniformity");
    const std::size_t s = g.vertex_count();
    const std::size_t n = h.vertex_count();
    if (n % s != 0)
        throw DomainError("vertex count " + std::to_string(n) + " is not divisible by " +
                          std::to_string(s) + "; no perfect packing can exist");

    const std::size_t copies = n / s;
    std::vector<std::vector<std::size_t>> edges;
    edges.reserve(copies * g.edge_count());
    for (std::size_t c = 0; c < copies; ++c) {
        for (const auto& edge : g.edges()) {
            std::vector<std::size_t> shifted;
            shifted.reserve(edge.size());
            for (std::size_t v : edge) shifted.push_back(c * s + v);
            edges.push_back(std::move(shifted));
        }
    }
    return PerfectPackingReduction{Hypergraph(n, g.uniformity(), std::move(edges)), h.complement(),
                                   n, copies};
}

PerfectPackingVerdict perfect_packing_condition(const Hypergraph& g, const Hypergraph& h,
                                                const EInterval& e) {
    if (g.uniformity() != h.uniformity())
        throw DomainError("hypergraphs must have the same uniformity");
    const std::size_t s = g.vertex_count();
    const std::size_t n = h.vertex_count();
    const std::size_t r = g.uniformity();
    if (n % s != 0)
        throw DomainError("vertex count " + std::to_string(n) + " is not divisible by " +
                          std::to_string(s) + "; no perfect packing can exist");

    PerfectPackingVerdict result;
    result.d = g.max_edge_intersection_degree();
    result.m = g.edge_count();
    result.s = s;

    Rational x = Rational(1) - make_rational(BigInt(h.min_degree()), binomial(n - 1, r - 1));
    if (x < 0) x = 0;
    result.x = x;

    // budget = d + 1 + r²·m/s (rational: s need not divide r²m)
    Rational budget = Rational(BigInt(result.d) + 1) +
                      make_rational(BigInt(r) * BigInt(r) * BigInt(result.m), BigInt(s));
    result.conservative_threshold = Rational(1) / (e.upper * budget);

    if (x * e.upper * budget < 1)
        result.verdict = TriState::holds;
    else if (x * e.lower * budget >= 1)
        result.verdict = TriState::fails;
    else
        result.verdict = TriState::indeterminate;
    return result;
}

PerfectMatchingConditions perfect_matching_conditions(const Hypergraph& h, const EInterval& e) {
    PerfectMatchingConditions result;
    const std::size_t n = h.vertex_count();
    const std::size_t r = h.uniformity();
    const BigInt min_deg(h.min_degree());

    if (n % r == 0) {
        result.uniform.applicable = true;
        // minDeg >= (1 - 1/(e(1+r)))·C(n-1,r-1)  <=>  e(1+r)(C - minDeg) <= C
        Rational capacity(binomial(n - 1, r - 1));
        Rational gap = capacity - Rational(min_deg);
        Rational scale(BigInt(1) + BigInt(r));
        if (e.upper * scale * gap <= capacity)
            result.uniform.verdict = TriState::holds;
        else if (e.lower * scale * gap > capacity)
            result.uniform.verdict = TriState::fails;
        else
            result.uniform.verdict = TriState::indeterminate;
    }

    if (r == 2 && n % 2 == 0 && n >= 2) {
        result.graph.applicable = true;
        // minDeg >= (3e-1)(n-1)/(3e)  <=>  3e((n-1) - minDeg) <= n-1
        Rational span(BigInt(n) - 1);
        Rational gap = span - Rational(min_deg);
        if (e.upper * 3 * gap <= span)
            result.graph.verdict = TriState::holds;
        else if (e.lower * 3 * gap > span)
            result.graph.verdict = TriState::fails;
        else
            result.graph.verdict = TriState::indeterminate;
    }
    return result;
}

bool verify_packing(const Hypergraph& h1, const Hypergraph& h2, std::size_t n,
                    const std::vector<std::size_t>& sigma) {
    if (h1.uniformity() != h2.uniformity())
        throw DomainError("hypergraphs must have the same uniformity");
    if (sigma.size() != h1.vertex_count())
        throw DomainError("embedding length does not match the first hypergraph's vertex count");
    std::set<std::size_t> seen;
    for (std::size_t v : sigma) {
        if (v < 1 || v > n) throw DomainError("embedding image out of range");
        if (!seen.insert(v).second) throw DomainError("embedding is not injective");
    }
    std::vector<std::size_t> mapped;
    for (const auto& edge : h1.edges()) {
        mapped.clear();
        for (std::size_t v : edge) mapped.push_back(sigma[v - 1]);
        std::sort(mapped.begin(), mapped.end());
        if (h2.has_edge(mapped)) return false;
    }
    return true;
}

} // namespace lll
