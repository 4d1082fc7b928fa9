#include <doctest.h>

#include "lll/combinatorics.hpp"
#include "lll/errors.hpp"
#include "lll/space.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

using namespace lll;

namespace {

// Independent oracle: all injections [2] -> [4] by explicit nested loops, in
// lexicographic image order.
std::vector<std::array<std::uint32_t, 2>> brute_injections_2_4() {
    std::vector<std::array<std::uint32_t, 2>> result;
    for (std::uint32_t a = 1; a <= 4; ++a)
        for (std::uint32_t b = 1; b <= 4; ++b)
            if (a != b) result.push_back({a, b});
    return result;
}

} // namespace

TEST_CASE("enumerate_injections(2,4) matches a brute-force oracle") {
    SampleSpace space = SampleSpace::enumerate_injections(2, 4);
    auto expected = brute_injections_2_4();
    REQUIRE(space.outcome_count() == expected.size());
    CHECK(space.domain_size() == 2);
    CHECK(space.codomain_size() == 4);

    for (std::size_t i = 0; i < expected.size(); ++i) {
        auto got = space.outcome(i);
        REQUIRE(got.size() == 2);
        CHECK(got[0] == expected[i][0]);
        CHECK(got[1] == expected[i][1]);
        CHECK(space.index_of(got) == i);
    }
}

TEST_CASE("enumerate_injections(3,5) has the closed-form count, injective rows, lex order") {
    SampleSpace space = SampleSpace::enumerate_injections(3, 5);
    REQUIRE(BigInt(space.outcome_count()) == injection_count(3, 5));
    REQUIRE(space.outcome_count() == 60);

    auto first = space.outcome(0);
    CHECK(std::vector<std::uint32_t>(first.begin(), first.end()) ==
          std::vector<std::uint32_t>{1, 2, 3});
    auto last = space.outcome(59);
    CHECK(std::vector<std::uint32_t>(last.begin(), last.end()) ==
          std::vector<std::uint32_t>{5, 4, 3});

    for (std::size_t i = 0; i < space.outcome_count(); ++i) {
        auto row = space.outcome(i);
        std::vector<std::uint32_t> sorted(row.begin(), row.end());
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()); // injective
        CHECK(sorted.front() >= 1);
        CHECK(sorted.back() <= 5);
        if (i > 0) {
            auto prev = space.outcome(i - 1);
            CHECK(std::lexicographical_compare(prev.begin(), prev.end(), row.begin(), row.end()));
        }
    }
}

TEST_CASE("enumerate_injections rejects bad shapes and oversized spaces") {
    CHECK_THROWS_AS(SampleSpace::enumerate_injections(0, 4), DomainError);
    CHECK_THROWS_AS(SampleSpace::enumerate_injections(5, 4), DomainError);
    CHECK_THROWS_AS(SampleSpace::enumerate_injections(11, 11), SizeLimitError);
    CHECK_THROWS_AS(SampleSpace::enumerate_injections(3, 5, 59), SizeLimitError);
    CHECK_NOTHROW(SampleSpace::enumerate_injections(3, 5, 60));

    try {
        SampleSpace::enumerate_injections(11, 11);
        FAIL("expected SizeLimitError");
    } catch (const SizeLimitError& e) {
        CHECK(e.required() == 39916800);
        CHECK(e.limit() == 10000000);
    }
}

TEST_CASE("index_of rejects arrays that are not outcomes") {
    SampleSpace space = SampleSpace::enumerate_injections(2, 4);
    std::vector<std::uint32_t> not_injective{2, 2};
    CHECK_THROWS_AS(space.index_of(not_injective), DomainError);
    std::vector<std::uint32_t> wrong_len{1, 2, 3};
    CHECK_THROWS_AS(space.index_of(wrong_len), DomainError);
    std::vector<std::uint32_t> out_of_range{1, 5};
    CHECK_THROWS_AS(space.index_of(out_of_range), DomainError);
}

TEST_CASE("event constructors and membership") {
    SampleSpace space = SampleSpace::enumerate_injections(2, 4);
    Event none = space.empty_event();
    Event all = space.full_event();
    CHECK(none.size() == 0);
    CHECK(none.empty());
    CHECK(all.size() == 12);

    Event third = space.singleton(2);
    CHECK(third.size() == 1);
    CHECK(third.contains(2));
    CHECK_FALSE(third.contains(3));

    Event first_is_one = space.event_where([](auto sigma) { return sigma[0] == 1; });
    CHECK(first_is_one.size() == 3); // (1,2), (1,3), (1,4)
    CHECK(probability(space, first_is_one) == Rational(1, 4));

    Event picked = space.event_from_indices({0, 2, 0});
    CHECK(picked.size() == 2); // duplicates collapse
    CHECK_THROWS_AS(space.event_from_indices({12}), DomainError);
}

TEST_CASE("event algebra satisfies set identities") {
    SampleSpace space = SampleSpace::enumerate_injections(3, 5);
    Event a = space.event_where([](auto s) { return s[0] == 1; });
    Event b = space.event_where([](auto s) { return s[1] == 2; });
    const std::uint64_t n = space.outcome_count();

    // Inclusion-exclusion and De Morgan, checked as exact counts.
    CHECK(a.union_size(b) == a.size() + b.size() - a.intersection_size(b));
    CHECK((a | b).size() == a.union_size(b));
    CHECK((a & b).size() == a.intersection_size(b));
    CHECK((a - b).size() == a.size() - a.intersection_size(b));
    CHECK(a.complement().size() == n - a.size());
    CHECK((a | b).complement() == (a.complement() & b.complement()));
    CHECK((a & b).complement() == (a.complement() | b.complement()));
    CHECK(a.difference_size(b) == (a - b).size());
    CHECK(a.intersects(b) == ((a & b).size() != 0));

    // P is additive on the disjoint split A = (A-B) | (A&B).
    CHECK(probability(space, a) ==
          probability(space, a - b) + probability(space, a & b));

    SampleSpace other = SampleSpace::enumerate_injections(3, 5);
    Event foreign = other.full_event();
    CHECK_THROWS_AS((void)(a & foreign), DomainError);
    CHECK_THROWS_AS((void)probability(space, foreign), DomainError);
}

TEST_CASE("conditional probability") {
    SampleSpace space = SampleSpace::enumerate_injections(2, 4);
    Event a = space.event_where([](auto s) { return s[0] == 1; });
    Event omega = space.full_event();

    CHECK(conditional(space, a, omega) == probability(space, a));
    CHECK(conditional(space, a, a) == 1);
    // Chain rule: P(A∩B) = P(B)·P(A|B).
    Event b = space.event_where([](auto s) { return s[1] >= 3; });
    CHECK(probability(space, a & b) == probability(space, b) * conditional(space, a, b));

    CHECK_THROWS_AS(conditional(space, a, space.empty_event()), NullConditionError);
}

TEST_CASE("injections are dependent: sigma(1)=1 vs sigma(2)=2 in I(2,4)") {
    SampleSpace space = SampleSpace::enumerate_injections(2, 4);
    Event a = space.event_where([](auto s) { return s[0] == 1; });
    Event b = space.event_where([](auto s) { return s[1] == 2; });
    CHECK(probability(space, a) == Rational(1, 4));
    CHECK(probability(space, b) == Rational(1, 4));
    CHECK(probability(space, a & b) == Rational(1, 12)); // only (1,2)
    CHECK_FALSE(is_mutually_independent(space, {a, b}));
}

TEST_CASE("mutually independent triple on an 8-point space") {
    // I(1,8) is a uniform 8-point space; three "coordinate bit" events are
    // fully independent by the product construction.
    SampleSpace space = SampleSpace::enumerate_injections(1, 8);
    REQUIRE(space.outcome_count() == 8);
    Event a = space.event_from_indices({0, 1, 2, 3});
    Event b = space.event_from_indices({0, 1, 4, 5});
    Event c = space.event_from_indices({0, 2, 4, 6});
    CHECK(is_mutually_independent(space, {a, b}));
    CHECK(is_mutually_independent(space, {a, b, c}));
}

TEST_CASE("pairwise independent but not mutually independent") {
    SampleSpace space = SampleSpace::enumerate_injections(1, 4);
    Event a = space.event_from_indices({0, 1});
    Event b = space.event_from_indices({0, 2});
    Event c = space.event_from_indices({0, 3});
    CHECK(is_mutually_independent(space, {a, b}));
    CHECK(is_mutually_independent(space, {a, c}));
    CHECK(is_mutually_independent(space, {b, c}));
    CHECK_FALSE(is_mutually_independent(space, {a, b, c})); // P(A∩B∩C)=1/4 != 1/8
}

TEST_CASE("independence test guards") {
    SampleSpace space = SampleSpace::enumerate_injections(1, 4);
    Event a = space.event_from_indices({0, 1});
    CHECK_THROWS_AS(is_mutually_independent(space, {a}), DomainError);

    std::vector<Event> many(21, a);
    CHECK_THROWS_AS(is_mutually_independent(space, many), SizeLimitError);
    std::vector<Event> twenty(20, space.full_event());
    CHECK(is_mutually_independent(space, twenty)); // Omega is independent of itself

    SampleSpace other = SampleSpace::enumerate_injections(1, 4);
    CHECK_THROWS_AS(is_mutually_independent(space, {a, other.full_event()}), DomainError);
}
