#include "packprod/catalog.hpp"

#include "packprod/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace packprod {

namespace {

std::uint64_t code_under(const Graph& g, const std::vector<Vertex>& label_of)
{
    // bit index of pair (i, j), i < j, in row-major upper-triangle order
    const std::size_t n = g.order();
    std::uint64_t code = 0;
    for (auto [u, v] : g.edges()) {
        std::size_t i = label_of[u];
        std::size_t j = label_of[v];
        if (i > j)
            std::swap(i, j);
        const std::size_t bit = i * n - i * (i + 1) / 2 + (j - i - 1);
        code |= std::uint64_t{1} << bit;
    }
    return code;
}

void search_labelings(const Graph& g, std::vector<std::vector<Vertex>>& classes, std::size_t cls,
                      std::vector<Vertex>& label_of, std::uint64_t& best)
{
    if (cls == classes.size()) {
        best = std::min(best, code_under(g, label_of));
        return;
    }
    auto& members = classes[cls];
    std::sort(members.begin(), members.end());
    std::size_t base = 0;
    for (std::size_t c = 0; c < cls; ++c)
        base += classes[c].size();
    do {
        for (std::size_t k = 0; k < members.size(); ++k)
            label_of[members[k]] = static_cast<Vertex>(base + k);
        search_labelings(g, classes, cls + 1, label_of, best);
    } while (std::next_permutation(members.begin(), members.end()));
}

} // namespace

std::uint64_t canonical_code(const Graph& g)
{
    const std::size_t n = g.order();
    if (n > 11)
        throw Error(ErrorCode::BadParameters, "canonical_code supports at most 11 vertices");
    std::map<std::size_t, std::vector<Vertex>, std::greater<>> by_degree;
    for (Vertex v = 0; v < n; ++v)
        by_degree[g.degree(v)].push_back(v);
    std::vector<std::vector<Vertex>> classes;
    for (auto& [deg, members] : by_degree)
        classes.push_back(members);
    std::vector<Vertex> label_of(n, 0);
    std::uint64_t best = ~std::uint64_t{0};
    search_labelings(g, classes, 0, label_of, best);
    return best;
}

std::vector<Graph> all_graphs(std::size_t n, const std::function<bool(const Graph&)>& keep)
{
    if (n > 8)
        throw Error(ErrorCode::BadParameters, "all_graphs supports at most 8 vertices");
    std::vector<Graph> level{Graph(0)};
    for (std::size_t k = 1; k <= n; ++k) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        const std::size_t prev = k - 1;
        for (const Graph& g : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << prev); ++mask) {
                GraphBuilder b(k);
                for (auto [u, v] : g.edges())
                    b.add_edge(u, v);
                for (Vertex u = 0; u < prev; ++u)
                    if ((mask >> u) & 1U)
                        b.add_edge(u, static_cast<Vertex>(prev));
                Graph candidate = std::move(b).build();
                if (keep && !keep(candidate))
                    continue;
                if (seen.insert(canonical_code(candidate)).second)
                    next.push_back(std::move(candidate));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> connected_graphs(std::size_t n)
{
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (is_connected(g))
            out.push_back(std::move(g));
    return out;
}

std::vector<Graph> bipartite_connected_graphs(std::size_t n)
{
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n, [](const Graph& h) { return is_bipartite(h); }))
        if (is_connected(g))
            out.push_back(std::move(g));
    return out;
}

namespace {

std::string rooted_code(const Graph& t, Vertex v, Vertex parent)
{
    std::vector<std::string> kids;
    for (Vertex w : t.neighbors(v))
        if (w != parent)
            kids.push_back(rooted_code(t, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids)
        out += k;
    return out + ")";
}

} // namespace

std::string tree_code(const Graph& tree)
{
    const std::size_t n = tree.order();
    if (n == 0)
        return "";
    // peel leaves to find the center (one or two vertices)
    std::vector<std::size_t> degree(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = tree.degree(v);
        if (degree[v] <= 1)
            layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : tree.neighbors(v))
                if (--degree[w] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    const Vertex none = static_cast<Vertex>(n);
    std::string best;
    for (Vertex c : layer) {
        std::string code = rooted_code(tree, c, none);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return best;
}

std::vector<Graph> trees(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorCode::BadParameters, "trees need at least one vertex");
    std::vector<Graph> level{Graph(1)};
    for (std::size_t k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& t : level) {
            for (Vertex attach = 0; attach < k - 1; ++attach) {
                GraphBuilder b(k);
                for (auto [u, v] : t.edges())
                    b.add_edge(u, v);
                b.add_edge(attach, static_cast<Vertex>(k - 1));
                Graph candidate = std::move(b).build();
                if (seen.insert(tree_code(candidate)).second)
                    next.push_back(std::move(candidate));
            }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace packprod
