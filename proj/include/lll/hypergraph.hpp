#pragma once

#include "lll/lll.hpp"
#include "lll/matching.hpp"
#include "lll/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lll {

// r-uniform hypergraph on vertices 1..vertex_count. Edges are stored sorted
// (each edge internally, and the edge list lexicographically); duplicate
// edges are rejected.
class Hypergraph {
public:
    Hypergraph(std::size_t vertex_count, std::size_t r,
               std::vector<std::vector<std::size_t>> edges);

    static Hypergraph complete(std::size_t vertex_count, std::size_t r);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t uniformity() const { return r_; }
    const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::size_t degree(std::size_t v) const;
    std::size_t min_degree() const; // over all vertices; 0 for an edgeless graph
    bool has_edge(const std::vector<std::size_t>& sorted_vertices) const;

    // Number of other edges sharing at least one vertex with edge #index.
    std::size_t edge_intersection_degree(std::size_t edge_index) const;
    // d = max over edges of edge_intersection_degree; 0 when edgeless.
    std::size_t max_edge_intersection_degree() const;

    // Same vertex count, same r, complementary edge set.
    Hypergraph complement() const;

private:
    std::size_t vertex_count_;
    std::size_t r_;
    std::vector<std::vector<std::size_t>> edges_;
};

// Brute-force isomorphism test (bijection search over vertex permutations);
// intended for the small per-piece validations, capped at 8 vertices.
bool is_isomorphic(const Hypergraph& a, const Hypergraph& b, std::size_t vertex_cap = 8);

// The two-hypergraph packing instance over injections V(H1) -> [n]: one
// forbidden matching (F1, F2, phi) per pair of edges F1 of H1, F2 of H2 and
// bijection phi between them, m1·m2·r! in total.
struct PackingInstance {
    Hypergraph h1;
    Hypergraph h2;
    std::size_t n = 0;
    std::vector<Matching> event_matchings;
    std::size_t m1 = 0;
    std::size_t m2 = 0;
    std::size_t d1 = 0;
    std::size_t d2 = 0;
};

PackingInstance build_packing_instance(const Hypergraph& h1, const Hypergraph& h2, std::size_t n,
                                       std::uint64_t matching_cap = 10'000'000);

// The packing condition (d1+1)·m2 + (d2+1)·m1 < (1/e)·C(n,r), decided
// against the e-enclosure.
TriState packing_condition(const Hypergraph& h1, const Hypergraph& h2, std::size_t n,
                           const EInterval& e = EInterval());

// Reduction of "partition V(H) into copies of G" to a two-hypergraph packing:
// H1 = n/s vertex-disjoint copies of G on [n], H2 = the complement of H.
struct PerfectPackingReduction {
    Hypergraph h1;
    Hypergraph h2;
    std::size_t n = 0;
    std::size_t copies = 0; // n / |V(G)|
};

PerfectPackingReduction perfect_packing_reduction(const Hypergraph& g, const Hypergraph& h);

// The degree-slack condition x·e·(d + 1 + r²m/s) < 1 where
// x = 1 - minDegree(H)/C(n-1,r-1) (clamped at 0), s = |V(G)|, m = |E(G)|,
// d = max edge-intersection degree of G.
struct PerfectPackingVerdict {
    TriState verdict = TriState::indeterminate;
    Rational x;                    // tightest valid slack value
    Rational conservative_threshold; // 1/(e.upper·(d+1+r²m/s)); holds iff x < this
    std::size_t d = 0;
    std::size_t m = 0;
    std::size_t s = 0;
};

PerfectPackingVerdict perfect_packing_condition(const Hypergraph& g, const Hypergraph& h,
                                                const EInterval& e = EInterval());

// Minimum-degree thresholds that force a perfect matching: the r-uniform one
// (min degree >= (1 - 1/(e(1+r)))·C(n-1,r-1), needs r | n) and the graph one
// (r = 2, n even, min degree >= (3e-1)(n-1)/(3e)).
struct DegreeThresholdVerdict {
    bool applicable = false;
    TriState verdict = TriState::indeterminate;
};

struct PerfectMatchingConditions {
    DegreeThresholdVerdict uniform; // any r, requires r | n
    DegreeThresholdVerdict graph;   // r = 2, requires n even
};

PerfectMatchingConditions perfect_matching_conditions(const Hypergraph& h,
                                                      const EInterval& e = EInterval());

// True iff no sigma-image of an edge of h1 is an edge of h2 (sigma maps
// V(H1) into [n], 1-based, and must be injective).
bool verify_packing(const Hypergraph& h1, const Hypergraph& h2, std::size_t n,
                    const std::vector<std::size_t>& sigma);

} // namespace lll
