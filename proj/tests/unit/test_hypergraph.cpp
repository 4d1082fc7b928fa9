#include <doctest.h>

#include "lll/combinatorics.hpp"
#include "lll/errors.hpp"
#include "lll/hypergraph.hpp"
#include "lll/lll.hpp"
#include "lll/rng.hpp"

#include <cstdint>
#include <vector>

using namespace lll;

namespace {

using Edges = std::vector<std::vector<std::size_t>>;

Hypergraph random_hypergraph(SplitMix64& rng, std::size_t n, std::size_t r,
                             std::size_t edge_count) {
    Hypergraph full = Hypergraph::complete(n, r);
    Edges pool = full.edges();
    for (std::size_t i = 0; i + 1 < pool.size(); ++i)
        std::swap(pool[i], pool[i + rng.next_below(pool.size() - i)]);
    pool.resize(std::min(edge_count, pool.size()));
    return Hypergraph(n, r, pool);
}

} // namespace

TEST_CASE("hypergraph construction normalizes and validates") {
    Hypergraph h(4, 2, {{2, 1}, {3, 4}});
    CHECK(h.vertex_count() == 4);
    CHECK(h.uniformity() == 2);
    CHECK(h.edge_count() == 2);
    CHECK(h.edges() == Edges{{1, 2}, {3, 4}}); // sorted within and across edges

    CHECK_THROWS_AS(Hypergraph(4, 0, {}), DomainError);
    CHECK_THROWS_AS(Hypergraph(2, 3, {}), DomainError);
    CHECK_THROWS_AS(Hypergraph(4, 2, {{1, 2, 3}}), DomainError);   // wrong arity
    CHECK_THROWS_AS(Hypergraph(4, 2, {{2, 2}}), DomainError);      // repeated vertex
    CHECK_THROWS_AS(Hypergraph(4, 2, {{1, 5}}), DomainError);      // out of range
    CHECK_THROWS_AS(Hypergraph(4, 2, {{0, 1}}), DomainError);      // vertices are 1-based
    CHECK_THROWS_AS(Hypergraph(4, 2, {{1, 2}, {2, 1}}), DomainError); // duplicate edge
}

TEST_CASE("complete hypergraph has all C(n,r) edges") {
    Hypergraph k53 = Hypergraph::complete(5, 3);
    CHECK(BigInt(k53.edge_count()) == binomial(5, 3));
    CHECK(k53.edges().front() == std::vector<std::size_t>{1, 2, 3});
    CHECK(k53.edges().back() == std::vector<std::size_t>{3, 4, 5});
    for (std::size_t v = 1; v <= 5; ++v) CHECK(BigInt(k53.degree(v)) == binomial(4, 2));
    CHECK(BigInt(k53.min_degree()) == binomial(4, 2));

    Hypergraph k11 = Hypergraph::complete(1, 1);
    CHECK(k11.edge_count() == 1);
}

TEST_CASE("degrees") {
    Hypergraph path(4, 2, {{1, 2}, {2, 3}});
    CHECK(path.degree(2) == 2);
    CHECK(path.degree(1) == 1);
    CHECK(path.degree(4) == 0);
    CHECK(path.min_degree() == 0); // vertex 4 touches nothing
    CHECK_THROWS_AS(path.degree(5), DomainError);

    Hypergraph edgeless(3, 2, {});
    CHECK(edgeless.min_degree() == 0);

    // Handshake identity on random instances: sum of degrees = r * |E|.
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph h = random_hypergraph(rng, 7, 3, 1 + rng.next_below(20));
        std::size_t total = 0;
        for (std::size_t v = 1; v <= 7; ++v) total += h.degree(v);
        CHECK(total == 3 * h.edge_count());
    }
}

TEST_CASE("has_edge and edge intersection degrees") {
    Hypergraph tri(3, 2, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(tri.has_edge({1, 2}));
    CHECK_FALSE(tri.has_edge({1, 3, 2})); // wrong arity never matches
    CHECK(tri.max_edge_intersection_degree() == 2);
    CHECK(tri.edge_intersection_degree(0) == 2);
    CHECK_THROWS_AS(tri.edge_intersection_degree(3), DomainError);

    Hypergraph disjoint(6, 2, {{1, 2}, {3, 4}, {5, 6}});
    CHECK(disjoint.max_edge_intersection_degree() == 0);

    Hypergraph lone(5, 3, {{1, 2, 3}});
    CHECK(lone.max_edge_intersection_degree() == 0);
    Hypergraph none(5, 3, {});
    CHECK(none.max_edge_intersection_degree() == 0);

    // The intersection degree never exceeds |E| - 1 and is monotone under
    // shared vertices; sanity-check on random instances.
    SplitMix64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph h = random_hypergraph(rng, 6, 2, 1 + rng.next_below(10));
        CHECK(h.max_edge_intersection_degree() <= h.edge_count() - 1);
    }
}

TEST_CASE("complement partitions the complete edge set") {
    Hypergraph k4_minus(4, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    Hypergraph co = k4_minus.complement();
    CHECK(co.edges() == Edges{{3, 4}});

    CHECK(Hypergraph::complete(5, 2).complement().edge_count() == 0);

    SplitMix64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph h = random_hypergraph(rng, 6, 3, rng.next_below(15));
        Hypergraph back = h.complement().complement();
        CHECK(back.edges() == h.edges());
        CHECK(BigInt(h.edge_count() + h.complement().edge_count()) == binomial(6, 3));
    }
}

TEST_CASE("brute-force isomorphism") {
    Hypergraph two_disjoint_a(4, 2, {{1, 2}, {3, 4}});
    Hypergraph two_disjoint_b(4, 2, {{1, 3}, {2, 4}});
    Hypergraph shared(4, 2, {{1, 2}, {2, 3}});
    CHECK(is_isomorphic(two_disjoint_a, two_disjoint_b));
    CHECK_FALSE(is_isomorphic(two_disjoint_a, shared));
    CHECK(is_isomorphic(shared, Hypergraph(4, 2, {{2, 4}, {4, 3}})));

    // Shape mismatches are decided without search.
    CHECK_FALSE(is_isomorphic(two_disjoint_a, Hypergraph(5, 2, {{1, 2}, {3, 4}})));
    CHECK_FALSE(is_isomorphic(two_disjoint_a, Hypergraph(4, 2, {{1, 2}})));

    CHECK_THROWS_AS(is_isomorphic(Hypergraph::complete(9, 2), Hypergraph::complete(9, 2)),
                    SizeLimitError);
    CHECK(is_isomorphic(Hypergraph::complete(9, 2), Hypergraph::complete(9, 2), 9));
}

TEST_CASE("packing instance over a pair of single edges") {
    Hypergraph h1(2, 2, {{1, 2}});
    Hypergraph h2(3, 2, {{2, 3}});
    PackingInstance inst = build_packing_instance(h1, h2, 5);
    CHECK(inst.m1 == 1);
    CHECK(inst.m2 == 1);
    CHECK(inst.d1 == 0);
    CHECK(inst.d2 == 0);
    REQUIRE(inst.event_matchings.size() == 2); // 1*1*2!
    CHECK(inst.event_matchings[0] == Matching::from_pairs(2, 5, {{1, 2}, {2, 3}}));
    CHECK(inst.event_matchings[1] == Matching::from_pairs(2, 5, {{1, 3}, {2, 2}}));

    // m1 * m2 * r! scaling on complete graphs.
    PackingInstance k33 = build_packing_instance(Hypergraph::complete(3, 2),
                                                 Hypergraph::complete(3, 2), 6);
    CHECK(k33.event_matchings.size() == 3 * 3 * 2);
    CHECK(k33.d1 == 2);
}

TEST_CASE("packing instance guards") {
    CHECK_THROWS_AS(build_packing_instance(Hypergraph(3, 2, {}), Hypergraph(3, 3, {}), 5),
                    DomainError);
    CHECK_THROWS_AS(build_packing_instance(Hypergraph(6, 2, {}), Hypergraph(3, 2, {}), 5),
                    DomainError);
    CHECK_THROWS_AS(build_packing_instance(Hypergraph(3, 2, {}), Hypergraph(6, 2, {}), 5),
                    DomainError);
    // C(12,5)^2 * 5! = 75,271,680 matchings blows the default cap before any
    // allocation happens.
    CHECK_THROWS_AS(build_packing_instance(Hypergraph::complete(12, 5),
                                           Hypergraph::complete(12, 5), 12),
                    SizeLimitError);
    CHECK_THROWS_AS(build_packing_instance(Hypergraph(2, 2, {{1, 2}}), Hypergraph(2, 2, {{1, 2}}),
                                           5, 1),
                    SizeLimitError);
}

TEST_CASE("packing condition decides against the enclosure") {
    Hypergraph edge3(3, 3, {{1, 2, 3}});
    // lhs = 2; 2e < C(8,3) = 56: holds.
    CHECK(packing_condition(edge3, edge3, 8) == TriState::holds);
    // 2e >= C(3,3) = 1: fails.
    CHECK(packing_condition(edge3, edge3, 3) == TriState::fails);

    // Boundary scaling: K4 against K4 in [6]: lhs = (2+1)*4 + (2+1)*4 = 24...
    Hypergraph k43 = Hypergraph::complete(4, 3);
    CHECK(k43.max_edge_intersection_degree() == 3);
    // lhs = (3+1)*4*2 = 32, C(6,3) = 20, 32e > 20: fails.
    CHECK(packing_condition(k43, k43, 6) == TriState::fails);

    CHECK_THROWS_AS(packing_condition(edge3, Hypergraph(4, 2, {}), 8), DomainError);
}

TEST_CASE("perfect packing reduction") {
    Hypergraph g(2, 2, {{1, 2}});
    Hypergraph k4 = Hypergraph::complete(4, 2);
    PerfectPackingReduction red = perfect_packing_reduction(g, k4);
    CHECK(red.n == 4);
    CHECK(red.copies == 2);
    CHECK(red.h1.edges() == Edges{{1, 2}, {3, 4}});
    CHECK(red.h2.edge_count() == 0); // complement of K4

    Hypergraph triangle(3, 2, {{1, 2}, {1, 3}, {2, 3}});
    Hypergraph host(6, 2, {{1, 2}});
    PerfectPackingReduction red2 = perfect_packing_reduction(triangle, host);
    CHECK(red2.copies == 2);
    CHECK(red2.h1.edge_count() == 6);
    CHECK(red2.h1.has_edge({4, 5}));
    CHECK(BigInt(red2.h2.edge_count()) == binomial(6, 2) - 1);

    CHECK_THROWS_AS(perfect_packing_reduction(triangle, k4), DomainError); // 3 does not divide 4
    CHECK_THROWS_AS(perfect_packing_reduction(Hypergraph(2, 1, {}), k4), DomainError);
}

TEST_CASE("perfect packing condition on K6 and on an edgeless host") {
    Hypergraph g(2, 2, {{1, 2}});
    Hypergraph k6 = Hypergraph::complete(6, 2);
    PerfectPackingVerdict good = perfect_packing_condition(g, k6);
    CHECK(good.verdict == TriState::holds);
    CHECK(good.x == 0); // min degree 5 = C(5,1)
    CHECK(good.d == 0);
    CHECK(good.m == 1);
    CHECK(good.s == 2);
    EInterval e;
    CHECK(good.conservative_threshold == Rational(1) / (e.upper * 3));

    Hypergraph empty6(6, 2, {});
    PerfectPackingVerdict bad = perfect_packing_condition(g, empty6);
    CHECK(bad.verdict == TriState::fails);
    CHECK(bad.x == 1);
}

TEST_CASE("perfect matching degree thresholds") {
    PerfectMatchingConditions k6 = perfect_matching_conditions(Hypergraph::complete(6, 2));
    CHECK(k6.uniform.applicable);
    CHECK(k6.uniform.verdict == TriState::holds); // gap = 0
    CHECK(k6.graph.applicable);
    CHECK(k6.graph.verdict == TriState::holds);

    Hypergraph c6(6, 2, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
    PerfectMatchingConditions cyc = perfect_matching_conditions(c6);
    CHECK(cyc.uniform.applicable);
    CHECK(cyc.uniform.verdict == TriState::fails); // 3e*(5-2) > 5
    CHECK(cyc.graph.applicable);
    CHECK(cyc.graph.verdict == TriState::fails);

    PerfectMatchingConditions k5 = perfect_matching_conditions(Hypergraph::complete(5, 2));
    CHECK_FALSE(k5.uniform.applicable); // 2 does not divide 5
    CHECK_FALSE(k5.graph.applicable);   // n odd

    PerfectMatchingConditions k93 = perfect_matching_conditions(Hypergraph::complete(9, 3));
    CHECK(k93.uniform.applicable);
    CHECK(k93.uniform.verdict == TriState::holds);
    CHECK_FALSE(k93.graph.applicable); // r != 2
}

TEST_CASE("verify_packing checks every mapped edge") {
    Hypergraph edge3(3, 3, {{1, 2, 3}});
    CHECK(verify_packing(edge3, edge3, 8, {1, 2, 4}));
    CHECK_FALSE(verify_packing(edge3, edge3, 8, {1, 2, 3}));
    CHECK_FALSE(verify_packing(edge3, edge3, 8, {3, 1, 2})); // same image set

    CHECK_THROWS_AS(verify_packing(edge3, edge3, 8, {1, 2}), DomainError);
    CHECK_THROWS_AS(verify_packing(edge3, edge3, 8, {1, 2, 2}), DomainError);
    CHECK_THROWS_AS(verify_packing(edge3, edge3, 8, {1, 2, 9}), DomainError);

    // Avoiding all canonical events is exactly verify_packing; cross-check on
    // the 2-edge instance by brute force over all injections [2] -> [4].
    Hypergraph h1(2, 2, {{1, 2}});
    Hypergraph h2(4, 2, {{1, 2}, {3, 4}});
    for (std::size_t a = 1; a <= 4; ++a) {
        for (std::size_t b = 1; b <= 4; ++b) {
            if (a == b) continue;
            bool image_is_forbidden = (a == 1 && b == 2) || (a == 2 && b == 1) ||
                                      (a == 3 && b == 4) || (a == 4 && b == 3);
            CHECK(verify_packing(h1, h2, 4, {a, b}) == !image_is_forbidden);
        }
    }
}
