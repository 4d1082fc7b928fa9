#include "lll/space.hpp"

#include "lll/combinatorics.hpp"
#include "lll/errors.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace lll {

// ---------------------------------------------------------------- Event ----

Event::Event(std::uint64_t space_id, DynamicBitset members)
    : space_id_(space_id), members_(std::move(members)) {}

void Event::require_same_space(const Event& other) const {
    if (space_id_ != other.space_id_) throw DomainError("events belong to different sample spaces");
}

Event Event::operator|(const Event& other) const {
    require_same_space(other);
    Event result = *this;
    result.members_ |= other.members_;
    return result;
}

Event Event::operator&(const Event& other) const {
    require_same_space(other);
    Event result = *this;
    result.members_ &= other.members_;
    return result;
}

Event Event::operator-(const Event& other) const {
    require_same_space(other);
    Event result = *this;
    result.members_.subtract(other.members_);
    return result;
}

Event Event::complement() const {
    Event result = *this;
    result.members_.flip();
    return result;
}

std::uint64_t Event::intersection_size(const Event& other) const {
    require_same_space(other);
    return members_.and_count(other.members_);
}

std::uint64_t Event::union_size(const Event& other) const {
    require_same_space(other);
    return members_.or_count(other.members_);
}

std::uint64_t Event::difference_size(const Event& other) const {
    require_same_space(other);
    return members_.andnot_count(other.members_);
}

// ---------------------------------------------------------- SampleSpace ----

namespace {
std::uint64_t next_space_id() {
    static std::atomic<std::uint64_t> counter{0};
    return counter.fetch_add(1, std::memory_order_relaxed);
}
} // namespace

SampleSpace::SampleSpace(std::size_t m, std::size_t n, std::size_t count,
                         std::vector<std::uint32_t> flat)
    : id_(next_space_id()), m_(m), n_(n), count_(count), flat_(std::move(flat)) {}

SampleSpace SampleSpace::enumerate_injections(std::size_t m, std::size_t n, std::uint64_t cap) {
    if (m < 1) throw DomainError("domain size must be at least 1");
    if (m > n) throw DomainError("domain size exceeds codomain size (no injections exist)");

    BigInt total = injection_count(m, n);
    if (total > BigInt(cap)) {
        throw SizeLimitError(
            total.convert_to<std::uint64_t>(), cap,
            "injection space needs " + total.str() + " outcomes, cap is " + std::to_string(cap));
    }
    std::size_t count = total.convert_to<std::size_t>();

    std::vector<std::uint32_t> flat;
    flat.reserve(count * m);
    std::vector<std::uint32_t> image(m, 0);
    std::vector<bool> used(n + 1, false);
    // Depth-first assignment of images in increasing value order produces the
    // outcomes in lexicographic order.
    std::size_t depth = 0;
    std::uint32_t value = 1;
    while (true) {
        if (value > n) {
            if (depth == 0) break;
            --depth;
            value = image[depth];
            used[value] = false;
            ++value;
            continue;
        }
        if (used[value]) {
            ++value;
            continue;
        }
        image[depth] = value;
        used[value] = true;
        if (depth + 1 == m) {
            flat.insert(flat.end(), image.begin(), image.end());
            used[value] = false;
            ++value;
        } else {
            ++depth;
            value = 1;
        }
    }

    return SampleSpace(m, n, count, std::move(flat));
}

std::span<const std::uint32_t> SampleSpace::outcome(std::size_t index) const {
    if (index >= count_) throw DomainError("outcome index out of range");
    return {flat_.data() + index * m_, m_};
}

std::size_t SampleSpace::index_of(std::span<const std::uint32_t> image) const {
    if (image.size() != m_) throw DomainError("image length does not match domain size");
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        auto cand = outcome(mid);
        if (std::lexicographical_compare(cand.begin(), cand.end(), image.begin(), image.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count_) {
        auto cand = outcome(lo);
        if (std::equal(cand.begin(), cand.end(), image.begin())) return lo;
    }
    throw DomainError("image array is not an outcome of this space");
}

Event SampleSpace::empty_event() const { return Event(id_, DynamicBitset(count_)); }

Event SampleSpace::full_event() const { return Event(id_, DynamicBitset(count_, true)); }

Event SampleSpace::singleton(std::size_t outcome_index) const {
    DynamicBitset bits(count_);
    bits.set(outcome_index); // range-checked by the bitset
    return Event(id_, std::move(bits));
}

Event SampleSpace::event_from_indices(const std::vector<std::size_t>& outcome_indices) const {
    DynamicBitset bits(count_);
    for (std::size_t i : outcome_indices) bits.set(i);
    return Event(id_, std::move(bits));
}

Event SampleSpace::event_where(
    const std::function<bool(std::span<const std::uint32_t>)>& pred) const {
    DynamicBitset bits(count_);
    for (std::size_t i = 0; i < count_; ++i) {
        if (pred(outcome(i))) bits.set(i);
    }
    return Event(id_, std::move(bits));
}

// ------------------------------------------------------------- measures ----

namespace {
void require_member(const SampleSpace& space, const Event& e) {
    if (e.space_id() != space.id()) throw DomainError("event does not belong to this sample space");
}
} // namespace

Rational probability(const SampleSpace& space, const Event& a) {
    require_member(space, a);
    return make_rational(BigInt(a.size()), BigInt(space.outcome_count()));
}

Rational conditional(const SampleSpace& space, const Event& a, const Event& b) {
    require_member(space, a);
    require_member(space, b);
    std::uint64_t nb = b.size();
    if (nb == 0) throw NullConditionError("conditioning on an event of probability zero");
    return make_rational(BigInt(a.intersection_size(b)), BigInt(nb));
}

namespace {

// DFS over subsets in increasing-index order. At each node the accumulated
// intersection, the product of the member sizes, and N^(s-1) ride along so
// each subset costs one AND + popcount + one big-integer multiply.
bool independence_dfs(const std::vector<Event>& events, std::size_t next,
                      const DynamicBitset& inter, const BigInt& prod, const BigInt& pow,
                      std::size_t depth, const BigInt& n_big) {
    for (std::size_t j = next; j < events.size(); ++j) {
        DynamicBitset child = inter;
        child &= events[j].members();
        BigInt child_prod = prod * BigInt(events[j].size());
        BigInt child_pow = depth == 0 ? BigInt(1) : pow * n_big;
        if (BigInt(child.count()) * child_pow != child_prod) return false;
        if (!independence_dfs(events, j + 1, child, child_prod, child_pow, depth + 1, n_big))
            return false;
    }
    return true;
}

} // namespace

bool is_mutually_independent(const SampleSpace& space, const std::vector<Event>& events,
                             std::size_t subset_cap) {
    if (events.size() < 2) throw DomainError("independence test needs at least two events");
    if (events.size() > subset_cap) {
        throw SizeLimitError(events.size(), subset_cap,
                             "independence test over " + std::to_string(events.size()) +
                                 " events exceeds the subset cap of " + std::to_string(subset_cap));
    }
    for (const Event& e : events) require_member(space, e);

    DynamicBitset all(space.outcome_count(), true);
    return independence_dfs(events, 0, all, BigInt(1), BigInt(1), 0, BigInt(space.outcome_count()));
}

} // namespace lll
