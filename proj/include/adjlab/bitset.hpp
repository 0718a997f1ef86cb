#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace adjlab {

// Fixed-size dynamic bitset. Backing store is 64-bit words; all set bits
// are guaranteed to lie below size(), so whole-word aggregates (count,
// compare, xor) need no masking.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Number of elements in the symmetric difference.
    friend int xor_count(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        int c = 0;
        for (size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] ^ b.words_[i]);
        return c;
    }
    friend int and_count(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        int c = 0;
        for (size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // (a & mask) == expected, word-wise, allocation-free.
    friend bool masked_equal(const Bitset& a, const Bitset& mask, const Bitset& expected) {
        assert(a.nbits_ == mask.nbits_ && a.nbits_ == expected.nbits_);
        for (size_t i = 0; i < a.words_.size(); ++i)
            if ((a.words_[i] & mask.words_[i]) != expected.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const = default;
    // Lexicographic on the packed words; a stable total order for dedup maps.
    std::strong_ordering operator<=>(const Bitset& o) const {
        if (auto c = nbits_ <=> o.nbits_; c != 0) return c;
        for (size_t i = 0; i < words_.size(); ++i)
            if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    // Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(int(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace adjlab
