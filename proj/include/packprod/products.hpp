#pragma once

#include "packprod/graph.hpp"

#include <optional>
#include <string_view>

namespace packprod {

enum class ProductKind { Cartesian, Strong, Direct, Lexicographic, Rooted };

std::string_view product_kind_name(ProductKind kind) noexcept;
/// Accepts the lowercase names "cartesian", "strong", "direct", "lexicographic", "rooted".
ProductKind parse_product_kind(std::string_view name);

/// A product graph on V(G) x V(H) with the fixed codec index = g * |V(H)| + h.
struct ProductGraph {
    Graph graph;
    ProductKind kind = ProductKind::Cartesian;
    Graph g;
    Graph h;
    std::optional<Vertex> root; // rooted products only

    std::size_t g_order() const noexcept { return g.order(); }
    std::size_t h_order() const noexcept { return h.order(); }

    Vertex encode(Vertex g_vertex, Vertex h_vertex) const noexcept
    {
        return static_cast<Vertex>(g_vertex * h.order() + h_vertex);
    }
    Vertex g_coord(Vertex index) const noexcept { return static_cast<Vertex>(index / h.order()); }
    Vertex h_coord(Vertex index) const noexcept { return static_cast<Vertex>(index % h.order()); }

    /// Cartesian set product, encoded.
    VertexSet pairs(const VertexSet& over_g, const VertexSet& over_h) const;
};

/// Throws EmptyFactor if a factor has no vertices, UnsupportedKind for Rooted.
ProductGraph product(const Graph& g, const Graph& h, ProductKind kind);

struct RootedSpec {
    Graph g;
    Graph h;
    Vertex root = 0;
};

/// G o_v H: each H-layer induces H; root copies (g_i, v) ~ (g_j, v) whenever g_i g_j is an edge of G.
ProductGraph rooted_product(const RootedSpec& spec);

enum class Factor { G, H };

/// G-layer through h (which == G, coordinate h) or H-layer through g (which == H, coordinate g).
VertexSet layer(const ProductGraph& p, Factor which, Vertex coordinate);
/// Coordinatewise image of s.
VertexSet project(const ProductGraph& p, const VertexSet& s, Factor onto);

/// Distance from the factor formulas; throws UnsupportedKind for Rooted.
ExtDistance product_distance(const ProductGraph& p, Vertex a, Vertex b);

/// Maps a set over H*G to the corresponding set over G*H via (h, g) -> (g, h).
VertexSet swap_coordinates(const VertexSet& s, std::size_t first_order, std::size_t second_order);

} // namespace packprod
