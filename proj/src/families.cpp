#include "packprod/families.hpp"

#include "packprod/error.hpp"

#include <charconv>
#include <set>
#include <string>
#include <vector>

namespace packprod {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    SplitMix64 rng(seed ^ (index * 0xD1B54A32D192ED03ULL));
    rng.next();
    return rng.next();
}

Graph path_graph(std::size_t n)
{
    GraphBuilder b(n);
    for (std::size_t i = 1; i < n; ++i)
        b.add_edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    return std::move(b).build();
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorCode::BadParameters, "cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return std::move(b).build();
}

Graph complete_graph(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph complete_bipartite(std::size_t m, std::size_t n)
{
    GraphBuilder b(m + n);
    for (Vertex u = 0; u < m; ++u)
        for (std::size_t v = m; v < m + n; ++v)
            b.add_edge(u, static_cast<Vertex>(v));
    return std::move(b).build();
}

Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph random_gnp(std::size_t n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(ErrorCode::BadParameters, "edge probability must lie in [0, 1]");
    SplitMix64 rng(seed);
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.next_unit() < p)
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph random_tree(std::size_t n, std::uint64_t seed)
{
    if (n <= 2)
        return path_graph(n);
    SplitMix64 rng(seed);
    std::vector<std::size_t> code(n - 2);
    for (auto& c : code)
        c = rng.next_below(n);

    std::vector<std::size_t> degree(n, 1);
    for (std::size_t c : code)
        ++degree[c];
    std::set<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);

    GraphBuilder b(n);
    for (std::size_t c : code) {
        const std::size_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        b.add_edge(static_cast<Vertex>(leaf), static_cast<Vertex>(c));
        if (--degree[c] == 1)
            leaves.insert(c);
    }
    const std::size_t a = *leaves.begin();
    const std::size_t z = *std::next(leaves.begin());
    b.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(z));
    return std::move(b).build();
}

Graph pendant_expansion(const Graph& base, std::size_t t)
{
    const std::size_t r = base.order();
    GraphBuilder b(r * (t + 1));
    for (auto [u, v] : base.edges())
        b.add_edge(pendant_index(u, 0, t), pendant_index(v, 0, t));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 1; j <= t; ++j)
            b.add_edge(pendant_index(i, 0, t), pendant_index(i, j, t));
    return std::move(b).build();
}

namespace {

[[noreturn]] void bad_spec(std::string_view spec, std::string_view why)
{
    throw Error(ErrorCode::ParseError, "graph spec '" + std::string(spec) + "': " + std::string(why));
}

std::size_t parse_size(std::string_view text, std::string_view spec)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        bad_spec(spec, "expected a non-negative integer, got '" + std::string(text) + "'");
    return value;
}

Graph parse_term(std::string_view term, std::string_view spec, std::uint64_t seed)
{
    if (term.size() < 2)
        bad_spec(spec, "term too short");
    const char kind = term.front();
    const std::string_view rest = term.substr(1);
    const auto comma = rest.find(',');
    switch (kind) {
    case 'P': return path_graph(parse_size(rest, spec));
    case 'C': return cycle_graph(parse_size(rest, spec));
    case 'K':
        if (comma == std::string_view::npos)
            return complete_graph(parse_size(rest, spec));
        return complete_bipartite(parse_size(rest.substr(0, comma), spec), parse_size(rest.substr(comma + 1), spec));
    case 'S': return star_graph(parse_size(rest, spec));
    case 'E': return empty_graph(parse_size(rest, spec));
    case 'R':
        if (comma == std::string_view::npos)
            bad_spec(spec, "pendant expansion needs 'Rr,t'");
        return pendant_expansion(complete_graph(parse_size(rest.substr(0, comma), spec)),
                                 parse_size(rest.substr(comma + 1), spec));
    case 'T': return random_tree(parse_size(rest, spec), seed);
    case 'G': {
        if (comma == std::string_view::npos)
            bad_spec(spec, "random graph needs 'Gn,p'");
        const std::string prob(rest.substr(comma + 1));
        std::size_t used = 0;
        double p = 0.0;
        try {
            p = std::stod(prob, &used);
        } catch (const std::exception&) {
            bad_spec(spec, "bad probability");
        }
        if (used != prob.size())
            bad_spec(spec, "bad probability");
        return random_gnp(parse_size(rest.substr(0, comma), spec), p, seed);
    }
    default: bad_spec(spec, "unknown family letter");
    }
}

} // namespace

Graph family(std::string_view spec, std::uint64_t seed)
{
    Graph result;
    std::size_t start = 0;
    std::uint64_t term_index = 0;
    while (start <= spec.size()) {
        auto end = spec.find('+', start);
        if (end == std::string_view::npos)
            end = spec.size();
        const Graph term = parse_term(spec.substr(start, end - start), spec, derive_seed(seed, term_index++));
        result = disjoint_union(result, term);
        start = end + 1;
    }
    return result;
}

} // namespace packprod
