#pragma once

#include "lll/bitops.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lll {

// Fixed-size bitset sized at construction. All bulk operations go through the
// active bitops kernel table. Invariant: bits past size() in the last word are
// always zero, so popcounts and equality never see garbage.
class DynamicBitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t bit_count, bool value = false);

    std::size_t size() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }

    bool test(std::size_t i) const;
    void set(std::size_t i);
    void reset(std::size_t i);
    void set_all();
    void reset_all();

    std::uint64_t count() const;
    bool any() const;
    bool none() const { return !any(); }

    // In-place set algebra; operands must have equal size().
    DynamicBitset& operator|=(const DynamicBitset& other);
    DynamicBitset& operator&=(const DynamicBitset& other);
    DynamicBitset& subtract(const DynamicBitset& other); // this &= ~other
    void flip();

    // Counted combinations without materializing a result bitset.
    std::uint64_t and_count(const DynamicBitset& other) const;
    std::uint64_t andnot_count(const DynamicBitset& other) const; // |this \ other|
    std::uint64_t or_count(const DynamicBitset& other) const;
    bool intersects(const DynamicBitset& other) const { return and_count(other) != 0; }

    // Index of the first set bit at position >= from, or npos.
    std::size_t find_first(std::size_t from = 0) const;

    bool operator==(const DynamicBitset& other) const = default;

private:
    void require_same_size(const DynamicBitset& other) const;
    void clear_tail();

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace lll
