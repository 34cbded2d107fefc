#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace packprod {

using Vertex = std::uint32_t;

/// Subset of the vertices 0..order-1 of a host graph, stored as 64-bit words.
/// Bits at positions >= order are always zero.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

        Vertex operator*() const { return static_cast<Vertex>(pos_); }
        const_iterator& operator++()
        {
            pos_ = set_->next(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

    private:
        const VertexSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t order) : order_(order), words_((order + kWordBits - 1) / kWordBits, 0) {}

    /// Throws Error(InvalidVertex) if any member is >= order.
    static VertexSet from_members(std::size_t order, std::span<const Vertex> members);
    static VertexSet from_members(std::size_t order, std::initializer_list<Vertex> members)
    {
        return from_members(order, std::span<const Vertex>(members.begin(), members.size()));
    }
    static VertexSet full(std::size_t order);

    std::size_t order() const noexcept { return order_; }

    bool contains(std::size_t v) const noexcept
    {
        return v < order_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
    }
    void insert(std::size_t v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(std::size_t v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    std::size_t size() const noexcept
    {
        std::size_t total = 0;
        for (Word w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    bool empty() const noexcept
    {
        for (Word w : words_)
            if (w != 0)
                return false;
        return true;
    }

    /// Smallest member >= from, or order() if none.
    std::size_t next(std::size_t from) const noexcept;
    std::size_t first() const noexcept { return next(0); }

    const_iterator begin() const { return const_iterator(this, first()); }
    const_iterator end() const { return const_iterator(this, order_); }

    std::vector<Vertex> members() const;

    bool intersects(const VertexSet& other) const noexcept;
    bool is_subset_of(const VertexSet& other) const noexcept;
    std::size_t intersection_size(const VertexSet& other) const noexcept;

    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& operator|=(const VertexSet& other) noexcept;
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) noexcept;

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
    /// Lexicographic order on the sorted member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

    std::span<const Word> words() const noexcept { return words_; }

private:
    std::size_t order_ = 0;
    std::vector<Word> words_;
};

bool lex_less(const VertexSet& a, const VertexSet& b);

} // namespace packprod
