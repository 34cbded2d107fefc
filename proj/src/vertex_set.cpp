#include "packprod/vertex_set.hpp"

#include "packprod/error.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace packprod {

VertexSet VertexSet::from_members(std::size_t order, std::span<const Vertex> members)
{
    VertexSet set(order);
    for (Vertex v : members) {
        if (v >= order)
            throw Error(ErrorCode::InvalidVertex,
                        "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order));
        set.insert(v);
    }
    return set;
}

VertexSet VertexSet::full(std::size_t order)
{
    VertexSet set(order);
    std::fill(set.words_.begin(), set.words_.end(), ~Word{0});
    if (const std::size_t tail = order % kWordBits; tail != 0)
        set.words_.back() = (Word{1} << tail) - 1;
    return set;
}

std::size_t VertexSet::next(std::size_t from) const noexcept
{
    if (from >= order_)
        return order_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
        if (w != 0)
            return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        if (++wi == words_.size())
            return order_;
        w = words_[wi];
    }
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this)
        out.push_back(v);
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept
{
    assert(order_ == other.order_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & other.words_[i]) != 0)
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept
{
    assert(order_ == other.order_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0)
            return false;
    return true;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const noexcept
{
    assert(order_ == other.order_);
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return total;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept
{
    assert(order_ == other.order_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept
{
    assert(order_ == other.order_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept
{
    assert(order_ == other.order_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b)
{
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (*ia != *ib)
            return *ia < *ib;
    return ia == a.end() && ib != b.end();
}

} // namespace packprod
