#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace ringtoric {

// Packed vector over GF(2). Vectors of up to 128 coordinates live inline.
class Gf2Vector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / word_bits] |= Word{1} << (i % word_bits); }
    void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(Word{1} << (i % word_bits)); }
    void flip(std::size_t i) noexcept { words_[i / word_bits] ^= Word{1} << (i % word_bits); }

    // Caller guarantees equal sizes.
    Gf2Vector& operator^=(const Gf2Vector& other) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) noexcept { return a ^= b; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (Word w : words_)
            if (w != 0) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    // |this AND other|
    std::size_t count_common(const Gf2Vector& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
        return c;
    }

    // Lowest set coordinate, or size() when zero.
    std::size_t first() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return size_;
    }

    std::vector<int> support() const {
        std::vector<int> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                out.push_back(static_cast<int>(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits))));
                bits &= bits - 1;
            }
        }
        return out;
    }

    friend bool operator==(const Gf2Vector& a, const Gf2Vector& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    friend bool operator<(const Gf2Vector& a, const Gf2Vector& b) noexcept {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        return a.words_ < b.words_;
    }

private:
    std::size_t size_ = 0;
    boost::container::small_vector<Word, 2> words_;
};

// 1-chains, cycle vectors and vertex-indexed boundary images all share the representation.
using ChainVector = Gf2Vector;

}  // namespace ringtoric
