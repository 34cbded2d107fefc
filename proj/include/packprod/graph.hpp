#pragma once

#include "packprod/vertex_set.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace packprod {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..order-1 with bit-row adjacency.
/// Immutable once built; use GraphBuilder or build_graph to construct.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph of the given order.
    explicit Graph(std::size_t order);

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const noexcept { return rows_[v]; }
    VertexSet closed_neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const noexcept { return rows_[v].size(); }
    std::size_t min_degree() const noexcept;
    std::size_t max_degree() const noexcept;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Throws InvalidVertex when v >= order().
    void check_vertex(Vertex v) const;
    void check_set(const VertexSet& s) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;

    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

/// Accumulates edges; duplicate edges collapse.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t order) : graph_(order) {}

    std::size_t order() const noexcept { return graph_.order(); }
    /// Throws InvalidVertex for out-of-range endpoints and LoopRejected for u == v.
    GraphBuilder& add_edge(Vertex u, Vertex v);
    Graph build() && { return std::move(graph_); }

private:
    Graph graph_;
};

Graph build_graph(std::size_t order, std::span<const Edge> edges);

/// Distance that may be infinite (disconnected pairs).
class ExtDistance {
public:
    constexpr ExtDistance() = default;
    constexpr explicit ExtDistance(std::uint32_t value) : value_(value) {}
    static constexpr ExtDistance infinite() { return ExtDistance(); }

    constexpr bool is_finite() const noexcept { return value_ != kInfinite; }
    /// Only meaningful when is_finite().
    constexpr std::uint32_t value() const noexcept { return value_; }

    friend constexpr ExtDistance operator+(ExtDistance a, ExtDistance b) noexcept
    {
        if (!a.is_finite() || !b.is_finite())
            return infinite();
        return ExtDistance(a.value_ + b.value_);
    }
    friend constexpr auto operator<=>(ExtDistance, ExtDistance) = default;

private:
    static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t value_ = kInfinite;
};

/// Minimum even and minimum odd walk lengths between two vertices.
struct ParityDistance {
    ExtDistance even;
    ExtDistance odd;
};

std::vector<ExtDistance> distances_from(const Graph& g, Vertex v);
/// All-pairs distances, row-major.
std::vector<std::vector<ExtDistance>> distance_matrix(const Graph& g);
/// BFS on the (vertex, parity) doubled state space.
ParityDistance parity_distances(const Graph& g, Vertex u, Vertex v);
/// Throws EmptyGraph for order 0; infinite iff disconnected.
ExtDistance diameter(const Graph& g);

VertexSet isolated_vertices(const Graph& g);

/// A subgraph with its vertex map back to the host graph.
struct MappedGraph {
    Graph graph;
    std::vector<Vertex> original; // new index -> host index

    VertexSet lift(const VertexSet& local, std::size_t host_order) const;
};

/// G with its isolated vertices removed (G^-).
MappedGraph remove_isolated(const Graph& g);
MappedGraph induced(const Graph& g, const VertexSet& s);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);

/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Vertex v of g becomes vertex perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

} // namespace packprod
