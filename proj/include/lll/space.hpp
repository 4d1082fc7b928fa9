#pragma once

#include "lll/bitset.hpp"
#include "lll/rational.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lll {

class SampleSpace;

// A subset of a space's outcomes, stored as a dense bitset over outcome
// indices. Events remember which space they belong to; mixing spaces in any
// operation is a DomainError.
class Event {
public:
    Event(std::uint64_t space_id, DynamicBitset members);

    std::uint64_t space_id() const { return space_id_; }
    std::size_t outcome_count() const { return members_.size(); }
    std::uint64_t size() const { return members_.count(); }
    bool empty() const { return members_.none(); }
    bool contains(std::size_t outcome_index) const { return members_.test(outcome_index); }
    const DynamicBitset& members() const { return members_; }

    Event operator|(const Event& other) const;
    Event operator&(const Event& other) const;
    Event operator-(const Event& other) const;
    Event complement() const;

    std::uint64_t intersection_size(const Event& other) const;
    std::uint64_t union_size(const Event& other) const;
    std::uint64_t difference_size(const Event& other) const;
    bool intersects(const Event& other) const { return intersection_size(other) != 0; }

    bool operator==(const Event& other) const = default;

private:
    void require_same_space(const Event& other) const;

    std::uint64_t space_id_;
    DynamicBitset members_;
};

// The uniform probability space of all injections [m] -> [n], enumerated in
// lexicographic order of their image arrays. Immutable after construction.
class SampleSpace {
public:
    static constexpr std::uint64_t default_enumeration_cap = 10'000'000;

    // Throws DomainError if m < 1 or m > n, SizeLimitError if C(n,m)*m!
    // exceeds the cap.
    static SampleSpace enumerate_injections(std::size_t m, std::size_t n,
                                            std::uint64_t cap = default_enumeration_cap);

    std::uint64_t id() const { return id_; }
    std::size_t domain_size() const { return m_; }
    std::size_t codomain_size() const { return n_; }
    std::size_t outcome_count() const { return count_; }

    // The outcome's image array: outcome(k)[i] is the (1-based) image of
    // domain point i+1.
    std::span<const std::uint32_t> outcome(std::size_t index) const;

    // Inverse lookup by binary search over the lexicographic order.
    // Throws DomainError if `image` is not an outcome of this space.
    std::size_t index_of(std::span<const std::uint32_t> image) const;

    Event empty_event() const;
    Event full_event() const;
    Event singleton(std::size_t outcome_index) const;
    Event event_from_indices(const std::vector<std::size_t>& outcome_indices) const;
    Event event_where(const std::function<bool(std::span<const std::uint32_t>)>& pred) const;

private:
    SampleSpace(std::size_t m, std::size_t n, std::size_t count, std::vector<std::uint32_t> flat);

    std::uint64_t id_;
    std::size_t m_;
    std::size_t n_;
    std::size_t count_;
    std::vector<std::uint32_t> flat_; // count_ blocks of m_ values each
};

// |A| / |outcomes|, in lowest terms.
Rational probability(const SampleSpace& space, const Event& a);

// P(A|B) = |A∩B| / |B|. Throws NullConditionError when P(B) = 0.
Rational conditional(const SampleSpace& space, const Event& a, const Event& b);

// True iff P(∩_{j∈S} A_j) = ∏_{j∈S} P(A_j) for every nonempty subset S.
// Requires 2 <= |events|; throws SizeLimitError above `subset_cap` events.
bool is_mutually_independent(const SampleSpace& space, const std::vector<Event>& events,
                             std::size_t subset_cap = 20);

} // namespace lll
