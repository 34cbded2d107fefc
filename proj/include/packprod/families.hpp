#pragma once

#include "packprod/graph.hpp"

#include <cstdint>
#include <string_view>

namespace packprod {

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the output is mixed with
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB; z ^ (z >> 31).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, 1) from the top 53 bits.
    double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// next() % bound; bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Seed of the i-th child stream of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

Graph path_graph(std::size_t n);
/// Throws BadParameters for n < 3.
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
/// K_{1,leaves}; the center is vertex 0.
Graph star_graph(std::size_t leaves);
Graph empty_graph(std::size_t n);
/// Each pair i < j (lexicographic) is an edge iff next_unit() < p.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);
/// Decodes a Prüfer sequence of n-2 entries drawn with next_below(n).
Graph random_tree(std::size_t n, std::uint64_t seed);
/// G_{r,t}: base vertex i becomes i*(t+1) and its t pendants are i*(t+1)+1 .. i*(t+1)+t.
Graph pendant_expansion(const Graph& base, std::size_t t);
/// Index of the j-th pendant (j in 1..t, 0 = the base vertex itself) of base vertex i in G_{r,t}.
constexpr Vertex pendant_index(std::size_t i, std::size_t j, std::size_t t)
{
    return static_cast<Vertex>(i * (t + 1) + j);
}

/// Parses a compact family description, terms joined by '+' (disjoint union):
///   Pn path, Cn cycle, Kn complete, Km,n complete bipartite, Sn star K_{1,n}, En edgeless,
///   Rr,t pendant expansion G_{r,t} of K_r, Tn random tree, Gn,p random G(n,p).  Random terms use `seed` (term k uses derive_seed(seed, k)).
/// Throws ParseError on malformed input.
Graph family(std::string_view spec, std::uint64_t seed = 0);

} // namespace packprod
