#include "packprod/products.hpp"

#include "packprod/error.hpp"

#include <algorithm>
#include <string>

namespace packprod {

std::string_view product_kind_name(ProductKind kind) noexcept
{
    switch (kind) {
    case ProductKind::Cartesian: return "cartesian";
    case ProductKind::Strong: return "strong";
    case ProductKind::Direct: return "direct";
    case ProductKind::Lexicographic: return "lexicographic";
    case ProductKind::Rooted: return "rooted";
    }
    return "unknown";
}

ProductKind parse_product_kind(std::string_view name)
{
    for (auto kind : {ProductKind::Cartesian, ProductKind::Strong, ProductKind::Direct, ProductKind::Lexicographic,
                      ProductKind::Rooted})
        if (product_kind_name(kind) == name)
            return kind;
    throw Error(ErrorCode::BadParameters, "unknown product kind '" + std::string(name) + "'");
}

VertexSet ProductGraph::pairs(const VertexSet& over_g, const VertexSet& over_h) const
{
    VertexSet out(graph.order());
    for (Vertex a : over_g)
        for (Vertex b : over_h)
            out.insert(encode(a, b));
    return out;
}

ProductGraph product(const Graph& g, const Graph& h, ProductKind kind)
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorCode::EmptyFactor, "product factors need at least one vertex");
    if (kind == ProductKind::Rooted)
        throw Error(ErrorCode::UnsupportedKind, "use rooted_product for rooted products");

    ProductGraph p;
    p.kind = kind;
    p.g = g;
    p.h = h;
    const std::size_t m = h.order();
    GraphBuilder b(g.order() * m);
    auto code = [m](Vertex x, Vertex y) { return static_cast<Vertex>(x * m + y); };

    const bool cartesian_edges = kind == ProductKind::Cartesian || kind == ProductKind::Strong;
    const bool direct_edges = kind == ProductKind::Direct || kind == ProductKind::Strong;

    if (kind == ProductKind::Lexicographic) {
        for (Vertex x = 0; x < g.order(); ++x)
            for (auto [y1, y2] : h.edges())
                b.add_edge(code(x, y1), code(x, y2));
        for (auto [x1, x2] : g.edges())
            for (Vertex y1 = 0; y1 < m; ++y1)
                for (Vertex y2 = 0; y2 < m; ++y2)
                    b.add_edge(code(x1, y1), code(x2, y2));
    }
    if (cartesian_edges) {
        for (Vertex x = 0; x < g.order(); ++x)
            for (auto [y1, y2] : h.edges())
                b.add_edge(code(x, y1), code(x, y2));
        for (auto [x1, x2] : g.edges())
            for (Vertex y = 0; y < m; ++y)
                b.add_edge(code(x1, y), code(x2, y));
    }
    if (direct_edges) {
        for (auto [x1, x2] : g.edges())
            for (auto [y1, y2] : h.edges()) {
                b.add_edge(code(x1, y1), code(x2, y2));
                b.add_edge(code(x1, y2), code(x2, y1));
            }
    }
    p.graph = std::move(b).build();
    return p;
}

ProductGraph rooted_product(const RootedSpec& spec)
{
    if (spec.g.order() == 0 || spec.h.order() == 0)
        throw Error(ErrorCode::EmptyFactor, "rooted product factors need at least one vertex");
    spec.h.check_vertex(spec.root);

    ProductGraph p;
    p.kind = ProductKind::Rooted;
    p.g = spec.g;
    p.h = spec.h;
    p.root = spec.root;
    GraphBuilder b(spec.g.order() * spec.h.order());
    for (Vertex x = 0; x < spec.g.order(); ++x)
        for (auto [y1, y2] : spec.h.edges())
            b.add_edge(p.encode(x, y1), p.encode(x, y2));
    for (auto [x1, x2] : spec.g.edges())
        b.add_edge(p.encode(x1, spec.root), p.encode(x2, spec.root));
    p.graph = std::move(b).build();
    return p;
}

VertexSet layer(const ProductGraph& p, Factor which, Vertex coordinate)
{
    VertexSet out(p.graph.order());
    if (which == Factor::G) {
        p.h.check_vertex(coordinate);
        for (Vertex x = 0; x < p.g_order(); ++x)
            out.insert(p.encode(x, coordinate));
    } else {
        p.g.check_vertex(coordinate);
        for (Vertex y = 0; y < p.h_order(); ++y)
            out.insert(p.encode(coordinate, y));
    }
    return out;
}

VertexSet project(const ProductGraph& p, const VertexSet& s, Factor onto)
{
    p.graph.check_set(s);
    VertexSet out(onto == Factor::G ? p.g_order() : p.h_order());
    for (Vertex v : s)
        out.insert(onto == Factor::G ? p.g_coord(v) : p.h_coord(v));
    return out;
}

namespace {

ExtDistance lexicographic_distance(const ProductGraph& p, Vertex g1, Vertex h1, Vertex g2, Vertex h2)
{
    if (g1 != g2)
        return distances_from(p.g, g1)[g2]; // infinite across components of G
    if (h1 == h2)
        return ExtDistance(0);
    const ExtDistance in_h = distances_from(p.h, h1)[h2];
    if (p.g.degree(g1) == 0)
        return in_h;
    return std::min(ExtDistance(2), in_h);
}

} // namespace

ExtDistance product_distance(const ProductGraph& p, Vertex a, Vertex b)
{
    p.graph.check_vertex(a);
    p.graph.check_vertex(b);
    const Vertex g1 = p.g_coord(a), h1 = p.h_coord(a);
    const Vertex g2 = p.g_coord(b), h2 = p.h_coord(b);
    switch (p.kind) {
    case ProductKind::Cartesian: return distances_from(p.g, g1)[g2] + distances_from(p.h, h1)[h2];
    case ProductKind::Strong: return std::max(distances_from(p.g, g1)[g2], distances_from(p.h, h1)[h2]);
    case ProductKind::Direct: {
        // A walk can only be padded by 2 when its start has an edge.
        if (p.g.degree(g1) == 0 || p.h.degree(h1) == 0)
            return a == b ? ExtDistance(0) : ExtDistance::infinite();
        const ParityDistance dg = parity_distances(p.g, g1, g2);
        const ParityDistance dh = parity_distances(p.h, h1, h2);
        return std::min(std::max(dg.even, dh.even), std::max(dg.odd, dh.odd));
    }
    case ProductKind::Lexicographic: return lexicographic_distance(p, g1, h1, g2, h2);
    case ProductKind::Rooted: break;
    }
    throw Error(ErrorCode::UnsupportedKind, "no closed distance formula for rooted products");
}

VertexSet swap_coordinates(const VertexSet& s, std::size_t first_order, std::size_t second_order)
{
    if (s.order() != first_order * second_order)
        throw Error(ErrorCode::InvalidVertex, "set order does not match the product order");
    VertexSet out(s.order());
    for (Vertex v : s) {
        const std::size_t a = v / second_order;
        const std::size_t b = v % second_order;
        out.insert(b * first_order + a);
    }
    return out;
}

} // namespace packprod
