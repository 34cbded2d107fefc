#include "packprod/constructions.hpp"

#include "packprod/error.hpp"
#include "packprod/families.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace packprod {

namespace {

void require_connected(const Graph& g, const char* which)
{
    if (g.order() == 0)
        throw Error(ErrorCode::EmptyGraph, std::string(which) + " has no vertices");
    if (!is_connected(g))
        throw Error(ErrorCode::DisconnectedFactor, std::string(which) + " must be connected");
}

/// Encoded set product over a product with second factor of order `h_order`.
VertexSet pairs(const VertexSet& a, const VertexSet& b, std::size_t h_order)
{
    VertexSet out(a.order() * h_order);
    for (Vertex x : a)
        for (Vertex y : b)
            out.insert(x * h_order + y);
    return out;
}

VertexSet single(std::size_t order, Vertex v)
{
    VertexSet s(order);
    s.insert(v);
    return s;
}

/// Witness of `solve` on G^-, expressed over V(G).
template <typename Solver>
VertexSet on_nonisolated(const Graph& g, Solver solve)
{
    const MappedGraph minus = remove_isolated(g);
    return minus.lift(solve(minus.graph).witness, g.order());
}

} // namespace

bool is_k2(const Graph& g) { return g.order() == 2 && g.edge_count() == 1; }

EtaValues eta_values(const Graph& g, const Graph& h)
{
    require_connected(g, "G");
    require_connected(h, "H");
    const std::uint32_t diam_g = diameter(g).value();
    const std::uint32_t diam_h = diameter(h).value();
    EtaValues out;
    out.eta = (diam_g + 1 + 2) / 3;
    out.flag = (!is_k2(g) && diam_h % 3 == 2) ? 1 : 0;
    return out;
}

std::vector<Vertex> diametral_path(const Graph& g)
{
    require_connected(g, "graph");
    const auto dist = distance_matrix(g);
    Vertex from = 0, to = 0;
    std::uint32_t best = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex w = u + 1; w < g.order(); ++w)
            if (dist[u][w].value() > best) {
                best = dist[u][w].value();
                from = u;
                to = w;
            }

    constexpr Vertex kUnset = ~Vertex{0};
    std::vector<Vertex> parent(g.order(), kUnset);
    std::deque<Vertex> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : g.neighbors(x))
            if (parent[y] == kUnset) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    std::vector<Vertex> path{to};
    while (path.back() != from)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

VertexSet cartesian_open_packing_product(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorCode::EmptyFactor, "product factors need at least one vertex");
    return pairs(rho_o(g, limits).witness, rho(h, limits).witness, h.order());
}

VertexSet diametral_open_packing(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    require_connected(g, "G");
    require_connected(h, "H");
    if (g.order() < 2 || h.order() < 2)
        throw Error(ErrorCode::BadParameters, "both factors need at least two vertices");
    const VertexSet base = rho_o(g, limits).witness;
    const std::vector<Vertex> path = diametral_path(h);
    const std::size_t diam = path.size() - 1;

    VertexSet out(g.order() * h.order());
    for (std::size_t i = 0; i <= diam; i += 3)
        out |= pairs(base, single(h.order(), path[i]), h.order());
    if (eta_values(g, h).flag == 1) {
        const auto outside = (VertexSet::full(g.order()) - base).first();
        out.insert(static_cast<Vertex>(outside * h.order() + path[diam]));
    }
    return out;
}

QuotientGraph quotient_graph(const Graph& g, const VertexSet& s)
{
    g.check_set(s);
    if (!is_2_independent(g, s))
        throw Error(ErrorCode::NotTwoIndependent, "quotient graph needs a 2-independent set");

    QuotientGraph q;
    q.part_of.assign(g.order(), std::nullopt);
    const MappedGraph sub = induced(g, s);
    for (const VertexSet& local : components(sub.graph)) {
        VertexSet part = sub.lift(local, g.order());
        for (Vertex v : part)
            q.part_of[v] = q.parts.size();
        q.parts.push_back(std::move(part));
    }

    GraphBuilder b(q.parts.size());
    for (std::size_t c = 0; c < q.parts.size(); ++c) {
        VertexSet near = q.parts[c];
        for (Vertex v : q.parts[c])
            near |= g.neighbors(v);
        VertexSet second(g.order());
        for (Vertex v : near)
            second |= g.neighbors(v);
        second -= near;
        for (std::size_t d = c + 1; d < q.parts.size(); ++d)
            if (q.parts[d].intersects(second) && !q.parts[d].intersects(near))
                b.add_edge(static_cast<Vertex>(c), static_cast<Vertex>(d));
    }
    q.graph = std::move(b).build();
    return q;
}

VertexSet gkr_open_packing(const Graph& g, std::size_t r, const VertexSet& s, const SearchLimits& limits)
{
    g.check_set(s);
    if (!is_triangle_free(g))
        throw Error(ErrorCode::TriangleFound, "G contains a triangle");
    if (r <= 2)
        throw Error(ErrorCode::BadParameters, "r must exceed 2");
    if (!is_2_independent(g, s))
        throw Error(ErrorCode::NotTwoIndependent, "S is not 2-independent");
    if (s.size() != alpha2(g, limits).value)
        throw Error(ErrorCode::BadParameters, "S is not a maximum 2-independent set");

    const QuotientGraph q = quotient_graph(g, s);
    std::vector<std::size_t> coloring = greedy_coloring(q.graph, welsh_powell_order(q.graph));
    if (color_count(coloring) > r)
        coloring = optimal_coloring(q.graph, limits);
    if (color_count(coloring) > r)
        throw Error(ErrorCode::ChromaticExceedsR, "chi(G/S) = " + std::to_string(color_count(coloring)) +
                                                      " exceeds r = " + std::to_string(r));

    VertexSet out(g.order() * r);
    for (Vertex v : s)
        out.insert(static_cast<Vertex>(v * r + coloring[*q.part_of[v]]));
    return out;
}

VertexSet lex_packing(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorCode::EmptyFactor, "product factors need at least one vertex");
    const VertexSet pg = on_nonisolated(g, [&](const Graph& x) { return rho(x, limits); });
    const VertexSet isolated = isolated_vertices(g);
    return pairs(pg, single(h.order(), 0), h.order()) | pairs(isolated, rho(h, limits).witness, h.order());
}

VertexSet lex_open_packing(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorCode::EmptyFactor, "product factors need at least one vertex");
    const VertexSet isolated_g = isolated_vertices(g);
    const VertexSet isolated_h = isolated_vertices(h);
    const VertexSet ph = rho_o(h, limits).witness;
    if (!isolated_h.empty()) {
        const VertexSet pg = on_nonisolated(g, [&](const Graph& x) { return rho_o(x, limits); });
        const auto h0 = static_cast<Vertex>(isolated_h.first());
        return pairs(pg, single(h.order(), h0), h.order()) | pairs(isolated_g, ph, h.order());
    }
    const VertexSet pg = on_nonisolated(g, [&](const Graph& x) { return rho(x, limits); });
    return pairs(pg, single(h.order(), 0), h.order()) | pairs(isolated_g, ph, h.order());
}

VertexSet strong_packing(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorCode::EmptyFactor, "product factors need at least one vertex");
    return pairs(rho(g, limits).witness, rho(h, limits).witness, h.order());
}

VertexSet strong_open_packing(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorCode::EmptyFactor, "product factors need at least one vertex");
    const VertexSet ig = isolated_vertices(g);
    const VertexSet ih = isolated_vertices(h);
    auto closed = [&](const Graph& x) { return rho(x, limits); };
    auto open = [&](const Graph& x) { return rho_o(x, limits); };
    const std::size_t m = h.order();
    return pairs(on_nonisolated(g, closed), on_nonisolated(h, closed), m) | pairs(ig, on_nonisolated(h, open), m) |
           pairs(on_nonisolated(g, open), ih, m) | pairs(ig, ih, m);
}

namespace {

VertexSet direct_singletons(const Graph& g, const Graph& h)
{
    return pairs(isolated_vertices(g), VertexSet::full(h.order()), h.order()) |
           pairs(VertexSet::full(g.order()), isolated_vertices(h), h.order());
}

} // namespace

VertexSet direct_packing(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorCode::EmptyFactor, "product factors need at least one vertex");
    auto closed = [&](const Graph& x) { return rho(x, limits); };
    auto open = [&](const Graph& x) { return rho_o(x, limits); };
    const VertexSet closed_g_open_h = pairs(on_nonisolated(g, closed), on_nonisolated(h, open), h.order());
    const VertexSet open_g_closed_h = pairs(on_nonisolated(g, open), on_nonisolated(h, closed), h.order());
    const VertexSet& core = open_g_closed_h.size() > closed_g_open_h.size() ? open_g_closed_h : closed_g_open_h;
    return core | direct_singletons(g, h);
}

VertexSet direct_open_packing(const Graph& g, const Graph& h, const SearchLimits& limits)
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorCode::EmptyFactor, "product factors need at least one vertex");
    auto open = [&](const Graph& x) { return rho_o(x, limits); };
    return pairs(on_nonisolated(g, open), on_nonisolated(h, open), h.order()) | direct_singletons(g, h);
}

std::string_view rooted_class_name(RootedClassKind kind) noexcept
{
    switch (kind) {
    case RootedClassKind::A: return "A";
    case RootedClassKind::B: return "B";
    case RootedClassKind::CExact: return "C_EXACT";
    case RootedClassKind::CDeficient: return "C_DEFICIENT";
    }
    return "unknown";
}

RootedClass classify_rooted(const Graph& h, Vertex v, const SearchLimits& limits)
{
    h.check_vertex(v);
    const std::vector<VertexSet> maximum = enumerate_maximum(h, ConflictKind::Open, limits);
    RootedClass out;
    out.rho_o_h = maximum.front().size();
    out.maximum_count = maximum.size();
    for (const VertexSet& p : maximum)
        if (!p.contains(v)) {
            out.kind = RootedClassKind::A;
            out.evidence = p;
            return out;
        }
    for (const VertexSet& p : maximum)
        if (!h.neighbors(v).intersects(p)) {
            out.kind = RootedClassKind::B;
            out.evidence = p;
            return out;
        }
    const MappedGraph star = induced(h, VertexSet::full(h.order()) - h.closed_neighbors(v));
    const InvariantResult inner = rho_o(star.graph, limits);
    out.rho_o_h_star = inner.value;
    out.evidence = star.lift(inner.witness, h.order());
    out.kind = inner.value + 1 == out.rho_o_h ? RootedClassKind::CExact : RootedClassKind::CDeficient;
    return out;
}

bool in_every_maximum_packing(const Graph& h, Vertex v, const SearchLimits& limits)
{
    h.check_vertex(v);
    const auto maximum = enumerate_maximum(h, ConflictKind::Closed, limits);
    return std::all_of(maximum.begin(), maximum.end(), [v](const VertexSet& p) { return p.contains(v); });
}

std::size_t rooted_rho(const Graph& g, const Graph& h, Vertex v, const SearchLimits& limits)
{
    const std::size_t n = g.order();
    const std::size_t rho_h = rho(h, limits).value;
    if (in_every_maximum_packing(h, v, limits))
        return rho(g, limits).value + n * (rho_h - 1);
    return n * rho_h;
}

std::size_t rooted_rho_o(const Graph& g, const Graph& h, Vertex v, const SearchLimits& limits)
{
    const std::size_t n = g.order();
    const RootedClass cls = classify_rooted(h, v, limits);
    const std::size_t reduced = n * (cls.rho_o_h - 1);
    switch (cls.kind) {
    case RootedClassKind::A: return n * cls.rho_o_h;
    case RootedClassKind::B: return reduced + rho_o(g, limits).value;
    case RootedClassKind::CExact: return reduced + rho(g, limits).value;
    case RootedClassKind::CDeficient: return reduced + isolated_vertices(g).size();
    }
    return 0;
}

VertexSet rooted_witness(const Graph& g, const Graph& h, Vertex v, ConflictKind kind, const SearchLimits& limits)
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorCode::EmptyFactor, "rooted product factors need at least one vertex");
    h.check_vertex(v);
    const std::size_t m = h.order();
    const VertexSet all_g = VertexSet::full(g.order());
    const VertexSet root = single(m, v);

    if (kind == ConflictKind::Closed) {
        const auto maximum = enumerate_maximum(h, ConflictKind::Closed, limits);
        for (const VertexSet& p : maximum)
            if (!p.contains(v))
                return pairs(all_g, p, m);
        return pairs(rho(g, limits).witness, root, m) | pairs(all_g, maximum.front() - root, m);
    }

    const RootedClass cls = classify_rooted(h, v, limits);
    switch (cls.kind) {
    case RootedClassKind::A: return pairs(all_g, cls.evidence, m);
    case RootedClassKind::B: return pairs(all_g, cls.evidence - root, m) | pairs(rho_o(g, limits).witness, root, m);
    case RootedClassKind::CExact: {
        const VertexSet full_layers = rho(g, limits).witness;
        const VertexSet ph = enumerate_maximum(h, ConflictKind::Open, limits).front();
        return pairs(full_layers, ph, m) | pairs(all_g - full_layers, cls.evidence, m);
    }
    case RootedClassKind::CDeficient: {
        const VertexSet ph = enumerate_maximum(h, ConflictKind::Open, limits).front();
        const VertexSet isolated = isolated_vertices(g);
        return pairs(isolated, ph, m) | pairs(all_g - isolated, ph - root, m);
    }
    }
    return VertexSet(g.order() * m);
}

VertexSet prop_gap_witness(std::size_t r, std::size_t t, std::size_t n, const Graph& base)
{
    if (r < 2 || t < 2)
        throw Error(ErrorCode::BadParameters, "r and t must be at least 2");
    if (n < t)
        throw Error(ErrorCode::BadParameters, "n must be at least t");
    if (base.order() != r)
        throw Error(ErrorCode::BadParameters, "base graph must have order r");
    VertexSet out(r * (t + 1) * n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 1; j <= t; ++j)
            out.insert(static_cast<Vertex>(pendant_index(i, j, t) * n + (j - 1)));
    return out;
}

} // namespace packprod
