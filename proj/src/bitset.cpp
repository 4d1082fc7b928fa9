#include "lll/bitset.hpp"

#include "lll/errors.hpp"

#include <bit>

namespace lll {

namespace {
constexpr std::size_t kWordBits = 64;
}

DynamicBitset::DynamicBitset(std::size_t bit_count, bool value)
    : bits_(bit_count), words_((bit_count + kWordBits - 1) / kWordBits, value ? ~0ull : 0ull) {
    if (value) clear_tail();
}

bool DynamicBitset::test(std::size_t i) const {
    if (i >= bits_) throw DomainError("bit index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void DynamicBitset::set(std::size_t i) {
    if (i >= bits_) throw DomainError("bit index out of range");
    words_[i / kWordBits] |= (1ull << (i % kWordBits));
}

void DynamicBitset::reset(std::size_t i) {
    if (i >= bits_) throw DomainError("bit index out of range");
    words_[i / kWordBits] &= ~(1ull << (i % kWordBits));
}

void DynamicBitset::set_all() {
    for (auto& w : words_) w = ~0ull;
    clear_tail();
}

void DynamicBitset::reset_all() {
    for (auto& w : words_) w = 0;
}

std::uint64_t DynamicBitset::count() const {
    return bitops::kernels().popcount(words_.data(), words_.size());
}

bool DynamicBitset::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

DynamicBitset& DynamicBitset::operator|=(const DynamicBitset& other) {
    require_same_size(other);
    bitops::kernels().bit_or(words_.data(), words_.data(), other.words_.data(), words_.size());
    return *this;
}

DynamicBitset& DynamicBitset::operator&=(const DynamicBitset& other) {
    require_same_size(other);
    bitops::kernels().bit_and(words_.data(), words_.data(), other.words_.data(), words_.size());
    return *this;
}

DynamicBitset& DynamicBitset::subtract(const DynamicBitset& other) {
    require_same_size(other);
    bitops::kernels().bit_andnot(words_.data(), words_.data(), other.words_.data(), words_.size());
    return *this;
}

void DynamicBitset::flip() {
    bitops::kernels().bit_not(words_.data(), words_.data(), words_.size());
    clear_tail();
}

std::uint64_t DynamicBitset::and_count(const DynamicBitset& other) const {
    require_same_size(other);
    return bitops::kernels().and_popcount(words_.data(), other.words_.data(), words_.size());
}

std::uint64_t DynamicBitset::andnot_count(const DynamicBitset& other) const {
    require_same_size(other);
    return bitops::kernels().andnot_popcount(words_.data(), other.words_.data(), words_.size());
}

std::uint64_t DynamicBitset::or_count(const DynamicBitset& other) const {
    require_same_size(other);
    return bitops::kernels().or_popcount(words_.data(), other.words_.data(), words_.size());
}

std::size_t DynamicBitset::find_first(std::size_t from) const {
    if (from >= bits_) return npos;
    std::size_t wi = from / kWordBits;
    std::uint64_t w = words_[wi] & (~0ull << (from % kWordBits));
    while (true) {
        if (w) {
            std::size_t pos = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            return pos < bits_ ? pos : npos;
        }
        if (++wi == words_.size()) return npos;
        w = words_[wi];
    }
}

void DynamicBitset::require_same_size(const DynamicBitset& other) const {
    if (bits_ != other.bits_) throw DomainError("bitset size mismatch");
}

void DynamicBitset::clear_tail() {
    std::size_t rem = bits_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (~0ull >> (kWordBits - rem));
}

} // namespace lll
