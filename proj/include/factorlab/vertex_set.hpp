#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace factorlab {

using Word = std::uint64_t;
inline constexpr int bits_per_word = 64;

inline constexpr int words_for(int n) { return (n + bits_per_word - 1) / bits_per_word; }

/// Largest supported vertex count.
inline constexpr int max_vertices = 4096;

/**
 * A subset of the vertex range 0..n-1, stored as a dense bitset.
 *
 * The universe size is part of the value; mixing sets over different
 * universes in a binary operation is a programming error (asserted by
 * the callers that care, not here).
 */
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {}

    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe)
    {
        for (int v : members)
            insert(v);
    }

    static VertexSet from(int universe, std::span<const int> members)
    {
        VertexSet s(universe);
        for (int v : members)
            s.insert(v);
        return s;
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v)
            s.insert(v);
        return s;
    }

    /// Range [first, last).
    static VertexSet range(int universe, int first, int last)
    {
        VertexSet s(universe);
        for (int v = first; v < last; ++v)
            s.insert(v);
        return s;
    }

    int universe() const noexcept { return universe_; }

    void insert(int v)
    {
        check(v);
        words_[v / bits_per_word] |= Word{1} << (v % bits_per_word);
    }

    void erase(int v)
    {
        check(v);
        words_[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word));
    }

    bool contains(int v) const noexcept
    {
        if (v < 0 || v >= universe_)
            return false;
        return (words_[v / bits_per_word] >> (v % bits_per_word)) & 1U;
    }

    int size() const noexcept
    {
        int c = 0;
        for (Word w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const noexcept
    {
        for (Word w : words_)
            if (w != 0)
                return false;
        return true;
    }

    bool intersects(const VertexSet& other) const noexcept
    {
        const auto k = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < k; ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const VertexSet& other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            const Word o = i < other.words_.size() ? other.words_[i] : 0;
            if (words_[i] & ~o)
                return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const
    {
        VertexSet s = full(universe_);
        return s -= *this;
    }

    bool operator==(const VertexSet&) const = default;

    /// Lowest member, or -1 when empty.
    int first() const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<int>(i) * bits_per_word + std::countr_zero(words_[i]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                const int bit = std::countr_zero(w);
                w &= w - 1;
                f(static_cast<int>(i) * bits_per_word + bit);
            }
        }
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

private:
    void check(int v) const
    {
        if (v < 0 || v >= universe_)
            throw Error(ErrorCode::BadParams, "vertex " + std::to_string(v) + " outside 0.." +
                                                  std::to_string(universe_ - 1));
    }

    int universe_ = 0;
    std::vector<Word> words_;
};

} // namespace factorlab
