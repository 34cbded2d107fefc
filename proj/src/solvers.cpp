#include "packprod/solvers.hpp"

#include "packprod/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace packprod {

bool is_independent(const Graph& g, const VertexSet& s)
{
    g.check_set(s);
    for (Vertex v : s)
        if (g.neighbors(v).intersects(s))
            return false;
    return true;
}

bool is_packing(const Graph& g, const VertexSet& s)
{
    g.check_set(s);
    // two members share a closed neighborhood vertex w iff both lie in N[w]
    for (Vertex w = 0; w < g.order(); ++w)
        if (g.neighbors(w).intersection_size(s) + (s.contains(w) ? 1 : 0) > 1)
            return false;
    return true;
}

bool is_open_packing(const Graph& g, const VertexSet& s)
{
    g.check_set(s);
    for (Vertex w = 0; w < g.order(); ++w)
        if (g.neighbors(w).intersection_size(s) > 1)
            return false;
    return true;
}

bool is_2_independent(const Graph& g, const VertexSet& s)
{
    g.check_set(s);
    for (Vertex v : s)
        if (g.neighbors(v).intersection_size(s) > 1)
            return false;
    return true;
}

bool is_dominating(const Graph& g, const VertexSet& s)
{
    g.check_set(s);
    for (Vertex v = 0; v < g.order(); ++v)
        if (!s.contains(v) && !g.neighbors(v).intersects(s))
            return false;
    return true;
}

bool is_total_dominating(const Graph& g, const VertexSet& s)
{
    g.check_set(s);
    for (Vertex v = 0; v < g.order(); ++v)
        if (!g.neighbors(v).intersects(s))
            return false;
    return true;
}

Graph conflict_graph(const Graph& g, ConflictKind kind)
{
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        VertexSet reach(g.order());
        if (kind == ConflictKind::Closed) {
            reach |= g.neighbors(u);
            for (Vertex w : g.neighbors(u))
                reach |= g.neighbors(w);
        } else {
            for (Vertex w : g.neighbors(u))
                reach |= g.neighbors(w);
        }
        reach.erase(u);
        for (Vertex v : reach)
            if (u < v)
                b.add_edge(u, v);
    }
    return std::move(b).build();
}

namespace {

void charge(std::uint64_t& nodes, const SearchLimits& limits)
{
    if (++nodes > limits.node_budget)
        throw Error(ErrorCode::NodeBudgetExceeded,
                    "search exceeded the node budget of " + std::to_string(limits.node_budget));
}

/// Greedy partition of `cand` into cliques (lowest index first); returns the clique sizes.
std::vector<std::size_t> clique_cover(const Graph& g, VertexSet cand)
{
    std::vector<std::size_t> sizes;
    while (!cand.empty()) {
        const Vertex u = static_cast<Vertex>(cand.first());
        cand.erase(u);
        VertexSet pool = cand & g.neighbors(u);
        std::size_t size = 1;
        while (!pool.empty()) {
            const Vertex w = static_cast<Vertex>(pool.first());
            cand.erase(w);
            pool.erase(w);
            pool &= g.neighbors(w);
            ++size;
        }
        sizes.push_back(size);
    }
    return sizes;
}

/// Highest degree inside `cand`, ties to the lowest index. Returns {vertex, degree}.
std::pair<Vertex, std::size_t> branch_vertex(const Graph& g, const VertexSet& cand)
{
    Vertex best = static_cast<Vertex>(cand.first());
    std::size_t best_degree = 0;
    bool first = true;
    for (Vertex v : cand) {
        const std::size_t d = g.neighbors(v).intersection_size(cand);
        if (first || d > best_degree) {
            best = v;
            best_degree = d;
            first = false;
        }
    }
    return {best, best_degree};
}

class IndependentSetSearch {
public:
    IndependentSetSearch(const Graph& g, const SearchLimits& limits) : g_(g), limits_(limits) {}

    InvariantResult maximize()
    {
        expand(VertexSet::full(g_.order()));
        InvariantResult out;
        out.value = best_.size();
        out.witness = VertexSet::from_members(g_.order(), best_);
        out.nodes_explored = nodes_;
        return out;
    }

    std::vector<VertexSet> enumerate(std::size_t target)
    {
        enumerate_ = true;
        target_ = target;
        expand(VertexSet::full(g_.order()));
        std::sort(found_.begin(), found_.end(), lex_less);
        return std::move(found_);
    }

private:
    void record()
    {
        if (enumerate_) {
            if (current_.size() != target_)
                return;
            found_.push_back(VertexSet::from_members(g_.order(), current_));
            if (found_.size() > limits_.enumeration_limit)
                throw Error(ErrorCode::EnumerationLimitExceeded,
                            "more than " + std::to_string(limits_.enumeration_limit) + " maximum sets");
        } else if (current_.size() > best_.size()) {
            best_ = current_;
        }
    }

    void expand(VertexSet cand)
    {
        charge(nodes_, limits_);
        const std::size_t depth = current_.size();

        // vertices without neighbours in cand belong to every maximum extension
        VertexSet isolated(g_.order());
        for (Vertex v : cand)
            if (!g_.neighbors(v).intersects(cand))
                isolated.insert(v);
        for (Vertex v : isolated)
            current_.push_back(v);
        cand -= isolated;

        if (cand.empty()) {
            record();
        } else {
            const std::size_t bound = current_.size() + clique_cover(g_, cand).size();
            const bool prune = enumerate_ ? bound < target_ : bound <= best_.size();
            if (!prune) {
                const Vertex v = branch_vertex(g_, cand).first;
                current_.push_back(v);
                expand(cand - g_.closed_neighbors(v));
                current_.pop_back();
                cand.erase(v);
                expand(std::move(cand));
            }
        }
        current_.resize(depth);
    }

    const Graph& g_;
    const SearchLimits& limits_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
    bool enumerate_ = false;
    std::size_t target_ = 0;
    std::vector<VertexSet> found_;
};

class TwoIndependentSearch {
public:
    TwoIndependentSearch(const Graph& g, const SearchLimits& limits) : g_(g), limits_(limits), best_(g.order()) {}

    InvariantResult run()
    {
        expand(VertexSet::full(g_.order()), VertexSet(g_.order()), VertexSet(g_.order()));
        return {best_.size(), best_, nodes_};
    }

private:
    void expand(VertexSet cand, const VertexSet& chosen, const VertexSet& matched)
    {
        charge(nodes_, limits_);
        for (Vertex w : VertexSet(cand)) {
            const VertexSet touching = g_.neighbors(w) & chosen;
            if (touching.size() > 1 || touching.intersects(matched))
                cand.erase(w);
        }
        if (cand.empty()) {
            if (chosen.size() > best_.size())
                best_ = chosen;
            return;
        }
        std::size_t bound = chosen.size();
        for (std::size_t clique : clique_cover(g_, cand))
            bound += std::min<std::size_t>(clique, 2);
        if (bound <= best_.size())
            return;

        const Vertex v = branch_vertex(g_, cand).first;
        cand.erase(v);
        {
            VertexSet with = chosen;
            with.insert(v);
            VertexSet now_matched = matched;
            const VertexSet partner = g_.neighbors(v) & chosen;
            if (!partner.empty()) {
                now_matched |= partner;
                now_matched.insert(v);
            }
            expand(cand, with, now_matched);
        }
        expand(std::move(cand), chosen, matched);
    }

    const Graph& g_;
    const SearchLimits& limits_;
    std::uint64_t nodes_ = 0;
    VertexSet best_;
};

class DominationSearch {
public:
    DominationSearch(const Graph& g, bool total, const SearchLimits& limits) : g_(g), total_(total), limits_(limits)
    {
        for (Vertex v = 0; v < g.order(); ++v)
            covers_.push_back(total ? g.neighbors(v) : g.closed_neighbors(v));
    }

    InvariantResult run()
    {
        const std::size_t n = g_.order();
        if (n == 0)
            return {0, VertexSet(0), 0};
        const std::size_t reach = g_.max_degree() + (total_ ? 0 : 1);
        std::size_t k = (n + reach - 1) / reach;
        if (total_)
            k = std::max<std::size_t>(k, 2);
        for (;; ++k) {
            chosen_.clear();
            if (extend(VertexSet::full(n), k))
                return {k, VertexSet::from_members(n, chosen_), nodes_};
        }
    }

private:
    bool extend(const VertexSet& undominated, std::size_t slots)
    {
        charge(nodes_, limits_);
        if (undominated.empty())
            return true;
        if (slots == 0)
            return false;
        std::size_t best_cover = 0;
        for (const auto& cover : covers_)
            best_cover = std::max(best_cover, cover.intersection_size(undominated));
        if (best_cover * slots < undominated.size())
            return false;
        const Vertex u = static_cast<Vertex>(undominated.first());
        // some dominator of u must be chosen
        const VertexSet options = total_ ? g_.neighbors(u) : g_.closed_neighbors(u);
        for (Vertex w : options) {
            chosen_.push_back(w);
            if (extend(undominated - covers_[w], slots - 1))
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    bool total_;
    const SearchLimits& limits_;
    std::vector<VertexSet> covers_;
    std::vector<Vertex> chosen_;
    std::uint64_t nodes_ = 0;
};

std::vector<std::vector<Rational>> closed_neighborhood_matrix(const Graph& g, const Rational& sign)
{
    std::vector<std::vector<Rational>> rows(g.order(), std::vector<Rational>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex u : g.closed_neighbors(v))
            rows[v][u] = sign;
    return rows;
}

} // namespace

InvariantResult max_independent_set(const Graph& g, const SearchLimits& limits)
{
    return IndependentSetSearch(g, limits).maximize();
}

InvariantResult packing_number(const Graph& g, ConflictKind kind, const SearchLimits& limits)
{
    return max_independent_set(conflict_graph(g, kind), limits);
}

InvariantResult rho(const Graph& g, const SearchLimits& limits)
{
    return packing_number(g, ConflictKind::Closed, limits);
}

InvariantResult rho_o(const Graph& g, const SearchLimits& limits)
{
    return packing_number(g, ConflictKind::Open, limits);
}

InvariantResult alpha2(const Graph& g, const SearchLimits& limits) { return TwoIndependentSearch(g, limits).run(); }

InvariantResult gamma(const Graph& g, const SearchLimits& limits) { return DominationSearch(g, false, limits).run(); }

InvariantResult gamma_t(const Graph& g, const SearchLimits& limits)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw Error(ErrorCode::IsolatedVertex,
                        "total domination is undefined: vertex " + std::to_string(v) + " is isolated");
    return DominationSearch(g, true, limits).run();
}

FractionalSolution fractional_domination(const Graph& g)
{
    if (g.order() == 0)
        throw Error(ErrorCode::EmptyGraph, "fractional domination of the graph with no vertices");
    LinearProgram lp;
    lp.objective.assign(g.order(), Rational(-1));
    lp.rows = closed_neighborhood_matrix(g, Rational(-1));
    lp.rhs.assign(g.order(), Rational(-1));
    LpSolution sol = solve_lp(lp);
    return {-sol.value, std::move(sol.x)};
}

FractionalSolution fractional_packing(const Graph& g)
{
    if (g.order() == 0)
        throw Error(ErrorCode::EmptyGraph, "fractional packing of the graph with no vertices");
    LinearProgram lp;
    lp.objective.assign(g.order(), Rational(1));
    lp.rows = closed_neighborhood_matrix(g, Rational(1));
    lp.rhs.assign(g.order(), Rational(1));
    LpSolution sol = solve_lp(lp);
    return {sol.value, std::move(sol.x)};
}

Rational gamma_f(const Graph& g) { return fractional_domination(g).value; }

std::vector<std::size_t> greedy_coloring(const Graph& g, const std::vector<Vertex>& order)
{
    constexpr std::size_t kUncolored = ~std::size_t{0};
    std::vector<std::size_t> color(g.order(), kUncolored);
    for (Vertex v : order) {
        g.check_vertex(v);
        std::vector<bool> used(g.order() + 1, false);
        for (Vertex w : g.neighbors(v))
            if (color[w] != kUncolored)
                used[color[w]] = true;
        std::size_t c = 0;
        while (used[c])
            ++c;
        color[v] = c;
    }
    if (std::find(color.begin(), color.end(), kUncolored) != color.end())
        throw Error(ErrorCode::BadParameters, "coloring order must list every vertex");
    return color;
}

std::vector<Vertex> welsh_powell_order(const Graph& g)
{
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return order;
}

std::size_t color_count(const std::vector<std::size_t>& coloring)
{
    std::size_t count = 0;
    for (std::size_t c : coloring)
        count = std::max(count, c + 1);
    return count;
}

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& coloring)
{
    if (coloring.size() != g.order())
        return false;
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v])
            return false;
    return true;
}

namespace {

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, const SearchLimits& limits)
        : g_(g), limits_(limits), order_(welsh_powell_order(g)), color_(g.order(), 0)
    {
    }

    bool try_colors(std::size_t k)
    {
        k_ = k;
        return place(0, 0);
    }

    const std::vector<std::size_t>& coloring() const { return color_; }

private:
    bool place(std::size_t index, std::size_t used)
    {
        charge(nodes_, limits_);
        if (index == order_.size())
            return true;
        const Vertex v = order_[index];
        // new colors only in increasing order, so permuted colorings are not revisited
        for (std::size_t c = 0; c < std::min(k_, used + 1); ++c) {
            bool clash = false;
            for (std::size_t j = 0; j < index && !clash; ++j)
                clash = color_[order_[j]] == c && g_.adjacent(v, order_[j]);
            if (clash)
                continue;
            color_[v] = c;
            if (place(index + 1, std::max(used, c + 1)))
                return true;
        }
        return false;
    }

    const Graph& g_;
    const SearchLimits& limits_;
    std::vector<Vertex> order_;
    std::vector<std::size_t> color_;
    std::size_t k_ = 0;
    std::uint64_t nodes_ = 0;
};

std::size_t greedy_clique_size(const Graph& g)
{
    std::size_t best = g.order() == 0 ? 0 : 1;
    for (Vertex start = 0; start < g.order(); ++start) {
        VertexSet pool = g.neighbors(start);
        std::size_t size = 1;
        while (!pool.empty()) {
            const Vertex w = static_cast<Vertex>(pool.first());
            pool &= g.neighbors(w);
            ++size;
        }
        best = std::max(best, size);
    }
    return best;
}

} // namespace

std::vector<std::size_t> optimal_coloring(const Graph& g, const SearchLimits& limits)
{
    std::vector<std::size_t> greedy = greedy_coloring(g, welsh_powell_order(g));
    const std::size_t upper = color_count(greedy);
    ColoringSearch search(g, limits);
    for (std::size_t k = greedy_clique_size(g); k < upper; ++k)
        if (search.try_colors(k))
            return search.coloring();
    return greedy;
}

std::size_t chromatic_number(const Graph& g, const SearchLimits& limits)
{
    return color_count(optimal_coloring(g, limits));
}

std::vector<VertexSet> enumerate_maximum(const Graph& g, ConflictKind kind, const SearchLimits& limits)
{
    if (limits.enumeration_limit == 0)
        throw Error(ErrorCode::BadParameters, "enumeration limit must be at least 1");
    const Graph conflicts = conflict_graph(g, kind);
    const std::size_t target = max_independent_set(conflicts, limits).value;
    return IndependentSetSearch(conflicts, limits).enumerate(target);
}

std::string_view invariant_name(Invariant inv) noexcept
{
    switch (inv) {
    case Invariant::Rho: return "rho";
    case Invariant::RhoOpen: return "rho_o";
    case Invariant::Alpha2: return "alpha2";
    case Invariant::Gamma: return "gamma";
    case Invariant::GammaTotal: return "gamma_t";
    case Invariant::GammaFractional: return "gamma_f";
    case Invariant::Chromatic: return "chi";
    }
    return "unknown";
}

Invariant parse_invariant(std::string_view name)
{
    for (auto inv : {Invariant::Rho, Invariant::RhoOpen, Invariant::Alpha2, Invariant::Gamma, Invariant::GammaTotal,
                     Invariant::GammaFractional, Invariant::Chromatic})
        if (invariant_name(inv) == name)
            return inv;
    throw Error(ErrorCode::BadParameters, "unknown invariant '" + std::string(name) + "'");
}

} // namespace packprod
