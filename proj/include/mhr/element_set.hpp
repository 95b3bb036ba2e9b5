#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef MHR_MAX_CARRIER
#define MHR_MAX_CARRIER 64
#endif

namespace mhr {

/// Largest carrier a structure may have. Raise with -DMHR_MAX_CARRIER=<multiple of 64>.
inline constexpr std::size_t kMaxCarrier = MHR_MAX_CARRIER;
static_assert(kMaxCarrier % 64 == 0, "MHR_MAX_CARRIER must be a multiple of 64");

/// Index of a carrier element. Index 0 is always the additive identity.
using Element = std::uint32_t;

/**
 * Fixed-width bit vector over carrier indices [0, Bits).
 *
 * All subset algebra in the library runs on this type, so every operation
 * is word-parallel and allocation free. The set does not know its carrier
 * size; callers that need a complement pass the carrier mask explicitly.
 */
template <std::size_t Bits>
class BitSet
{
    static constexpr std::size_t kWords = Bits / 64;
    using Word = std::uint64_t;

    std::array<Word, kWords> words_{};

public:
    static constexpr std::size_t capacity = Bits;

    constexpr BitSet() = default;

    BitSet(std::initializer_list<Element> elems)
    {
        for (Element e : elems)
            set(e);
    }

    template <typename It>
    static BitSet from_range(It first, It last)
    {
        BitSet s;
        for (; first != last; ++first)
            s.set(static_cast<Element>(*first));
        return s;
    }

    static BitSet singleton(Element e)
    {
        BitSet s;
        s.set(e);
        return s;
    }

    /// Low 64 elements from a bitmask.
    static BitSet from_mask(std::uint64_t mask)
    {
        BitSet s;
        s.words_[0] = mask;
        return s;
    }

    /// {0, 1, ..., n-1}
    static BitSet prefix(std::size_t n)
    {
        BitSet s;
        for (std::size_t w = 0; w < kWords; ++w) {
            std::size_t lo = w * 64;
            if (n >= lo + 64)
                s.words_[w] = ~Word{0};
            else if (n > lo)
                s.words_[w] = (Word{1} << (n - lo)) - 1;
        }
        return s;
    }

    void set(Element e) { words_[e / 64] |= Word{1} << (e % 64); }
    void reset(Element e) { words_[e / 64] &= ~(Word{1} << (e % 64)); }
    [[nodiscard]] bool test(Element e) const
    {
        return e < Bits && ((words_[e / 64] >> (e % 64)) & 1u) != 0;
    }
    [[nodiscard]] bool contains(Element e) const { return test(e); }

    [[nodiscard]] bool empty() const
    {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    [[nodiscard]] std::size_t count() const
    {
        std::size_t c = 0;
        for (Word w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Smallest member, or Bits when empty.
    [[nodiscard]] Element first() const
    {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] != 0)
                return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
        return static_cast<Element>(Bits);
    }

    /// Smallest member strictly greater than e, or Bits.
    [[nodiscard]] Element next(Element e) const
    {
        std::size_t i = static_cast<std::size_t>(e) + 1;
        if (i >= Bits)
            return static_cast<Element>(Bits);
        std::size_t w = i / 64;
        Word cur = words_[w] & (~Word{0} << (i % 64));
        while (true) {
            if (cur != 0)
                return static_cast<Element>(w * 64 + std::countr_zero(cur));
            if (++w == kWords)
                return static_cast<Element>(Bits);
            cur = words_[w];
        }
    }

    /// Largest member + 1, or 0 when empty.
    [[nodiscard]] std::size_t extent() const
    {
        for (std::size_t w = kWords; w-- > 0;)
            if (words_[w] != 0)
                return w * 64 + 64 - static_cast<std::size_t>(std::countl_zero(words_[w]));
        return 0;
    }

    [[nodiscard]] bool subset_of(const BitSet& o) const
    {
        for (std::size_t w = 0; w < kWords; ++w)
            if ((words_[w] & ~o.words_[w]) != 0)
                return false;
        return true;
    }

    [[nodiscard]] bool intersects(const BitSet& o) const
    {
        for (std::size_t w = 0; w < kWords; ++w)
            if ((words_[w] & o.words_[w]) != 0)
                return true;
        return false;
    }

    BitSet& operator|=(const BitSet& o)
    {
        for (std::size_t w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    BitSet& operator&=(const BitSet& o)
    {
        for (std::size_t w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    /// Set difference.
    BitSet& operator-=(const BitSet& o)
    {
        for (std::size_t w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend BitSet operator-(BitSet a, const BitSet& b) { return a -= b; }

    friend bool operator==(const BitSet&, const BitSet&) = default;

    /// Raw lexicographic order on the words, low word most significant.
    friend bool operator<(const BitSet& a, const BitSet& b) { return a.words_ < b.words_; }

    [[nodiscard]] std::size_t hash() const
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Word w : words_)
            h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

    [[nodiscard]] Word word(std::size_t i) const { return words_[i]; }

    class const_iterator
    {
        const BitSet* set_ = nullptr;
        Element cur_ = 0;

    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Element;
        using difference_type = std::ptrdiff_t;
        using pointer = const Element*;
        using reference = Element;

        const_iterator() = default;
        const_iterator(const BitSet* s, Element c) : set_(s), cur_(c) {}
        Element operator*() const { return cur_; }
        const_iterator& operator++()
        {
            cur_ = set_->next(cur_);
            return *this;
        }
        const_iterator operator++(int)
        {
            auto t = *this;
            ++*this;
            return t;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b)
        {
            return a.cur_ == b.cur_;
        }
    };

    [[nodiscard]] const_iterator begin() const { return {this, first()}; }
    [[nodiscard]] const_iterator end() const { return {this, static_cast<Element>(Bits)}; }

    [[nodiscard]] std::vector<Element> to_vector() const { return {begin(), end()}; }
};

using ElementSet = BitSet<kMaxCarrier>;

struct ElementSetHash
{
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Deterministic order used for every sorted listing: by size, then by bitmask.
inline bool size_then_mask_less(const ElementSet& a, const ElementSet& b)
{
    auto ca = a.count(), cb = b.count();
    if (ca != cb)
        return ca < cb;
    // Compare as integers, most significant word first.
    for (std::size_t w = kMaxCarrier / 64; w-- > 0;)
        if (a.word(w) != b.word(w))
            return a.word(w) < b.word(w);
    return false;
}

/// `{a,b,c}` with ascending indices.
inline std::string to_string(const ElementSet& s)
{
    std::string out = "{";
    bool first = true;
    for (Element e : s) {
        if (!first)
            out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const ElementSet& s) { return os << to_string(s); }

} // namespace mhr
