#include "packprod/graph.hpp"

#include "packprod/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace packprod {

namespace {

void require_vertex(std::size_t order, Vertex v)
{
    if (v >= order)
        throw Error(ErrorCode::InvalidVertex,
                    "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order));
}

} // namespace

Graph::Graph(std::size_t order) : rows_(order, VertexSet(order)) {}

VertexSet Graph::closed_neighbors(Vertex v) const
{
    VertexSet out = rows_[v];
    out.insert(v);
    return out;
}

std::size_t Graph::min_degree() const noexcept
{
    std::size_t best = rows_.empty() ? 0 : rows_.front().size();
    for (const auto& row : rows_)
        best = std::min(best, row.size());
    return best;
}

std::size_t Graph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (const auto& row : rows_)
        best = std::max(best, row.size());
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (std::size_t v = rows_[u].next(u + 1); v < order(); v = rows_[u].next(v + 1))
            out.emplace_back(u, static_cast<Vertex>(v));
    return out;
}

void Graph::check_vertex(Vertex v) const { require_vertex(order(), v); }

void Graph::check_set(const VertexSet& s) const
{
    if (s.order() != order())
        throw Error(ErrorCode::InvalidVertex, "vertex set of order " + std::to_string(s.order()) +
                                                  " does not match graph order " + std::to_string(order()));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    require_vertex(order(), u);
    require_vertex(order(), v);
    if (u == v)
        throw Error(ErrorCode::LoopRejected, "loop at vertex " + std::to_string(u));
    if (!graph_.rows_[u].contains(v)) {
        graph_.rows_[u].insert(v);
        graph_.rows_[v].insert(u);
        ++graph_.edge_count_;
    }
    return *this;
}

Graph build_graph(std::size_t order, std::span<const Edge> edges)
{
    GraphBuilder builder(order);
    for (auto [u, v] : edges)
        builder.add_edge(u, v);
    return std::move(builder).build();
}

std::vector<ExtDistance> distances_from(const Graph& g, Vertex v)
{
    g.check_vertex(v);
    std::vector<ExtDistance> dist(g.order());
    VertexSet unseen = VertexSet::full(g.order());
    VertexSet frontier(g.order());
    frontier.insert(v);
    unseen.erase(v);
    for (std::uint32_t level = 0; !frontier.empty(); ++level) {
        VertexSet next(g.order());
        for (Vertex u : frontier) {
            dist[u] = ExtDistance(level);
            next |= g.neighbors(u);
        }
        next &= unseen;
        unseen -= next;
        frontier = std::move(next);
    }
    return dist;
}

std::vector<std::vector<ExtDistance>> distance_matrix(const Graph& g)
{
    std::vector<std::vector<ExtDistance>> out;
    out.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(distances_from(g, v));
    return out;
}

ParityDistance parity_distances(const Graph& g, Vertex u, Vertex v)
{
    g.check_vertex(u);
    g.check_vertex(v);
    // state index = 2 * vertex + parity of the walk length so far
    std::vector<ExtDistance> dist(2 * g.order());
    std::deque<std::size_t> queue;
    dist[2 * u] = ExtDistance(0);
    queue.push_back(2 * u);
    while (!queue.empty()) {
        const std::size_t state = queue.front();
        queue.pop_front();
        const Vertex x = static_cast<Vertex>(state / 2);
        const std::size_t flipped = 1 - state % 2;
        const ExtDistance step = dist[state] + ExtDistance(1);
        for (Vertex y : g.neighbors(x)) {
            const std::size_t next = 2 * y + flipped;
            if (!dist[next].is_finite()) {
                dist[next] = step;
                queue.push_back(next);
            }
        }
    }
    return {dist[2 * v], dist[2 * v + 1]};
}

ExtDistance diameter(const Graph& g)
{
    if (g.order() == 0)
        throw Error(ErrorCode::EmptyGraph, "diameter of the graph with no vertices");
    ExtDistance best(0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (ExtDistance d : distances_from(g, v))
            best = std::max(best, d);
    return best;
}

VertexSet isolated_vertices(const Graph& g)
{
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            out.insert(v);
    return out;
}

VertexSet MappedGraph::lift(const VertexSet& local, std::size_t host_order) const
{
    VertexSet out(host_order);
    for (Vertex v : local)
        out.insert(original[v]);
    return out;
}

MappedGraph induced(const Graph& g, const VertexSet& s)
{
    g.check_set(s);
    MappedGraph out;
    out.original = s.members();
    std::vector<Vertex> local(g.order(), 0);
    for (std::size_t i = 0; i < out.original.size(); ++i)
        local[out.original[i]] = static_cast<Vertex>(i);
    GraphBuilder builder(out.original.size());
    for (Vertex u : s) {
        const VertexSet row = g.neighbors(u) & s;
        for (Vertex w : row)
            if (u < w)
                builder.add_edge(local[u], local[w]);
    }
    out.graph = std::move(builder).build();
    return out;
}

MappedGraph remove_isolated(const Graph& g)
{
    return induced(g, VertexSet::full(g.order()) - isolated_vertices(g));
}

std::vector<VertexSet> components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet unseen = VertexSet::full(g.order());
    while (!unseen.empty()) {
        VertexSet comp(g.order());
        VertexSet frontier(g.order());
        frontier.insert(unseen.first());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next(g.order());
            for (Vertex u : frontier)
                next |= g.neighbors(u);
            next -= comp;
            frontier = std::move(next);
        }
        unseen -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_triangle_free(const Graph& g)
{
    for (auto [u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v)))
            return false;
    return true;
}

bool is_bipartite(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        const ParityDistance d = parity_distances(g, v, v);
        if (d.odd.is_finite())
            return false;
    }
    return true;
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    GraphBuilder builder(a.order() + b.order());
    for (auto [u, v] : a.edges())
        builder.add_edge(u, v);
    const auto shift = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges())
        builder.add_edge(u + shift, v + shift);
    return std::move(builder).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (perm.size() != g.order())
        throw Error(ErrorCode::BadParameters, "permutation length does not match graph order");
    GraphBuilder builder(g.order());
    for (auto [u, v] : g.edges())
        builder.add_edge(perm[u], perm[v]);
    return std::move(builder).build();
}

} // namespace packprod
