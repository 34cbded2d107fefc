#pragma once

#include "packprod/graph.hpp"
#include "packprod/simplex.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace packprod {

struct SearchLimits {
    std::uint64_t node_budget = 100'000'000;
    std::size_t enumeration_limit = 1'000'000;
};

/// Optimum value with a witness that validates under the matching predicate.
struct InvariantResult {
    std::size_t value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
};

enum class ConflictKind { Closed, Open };

bool is_independent(const Graph& g, const VertexSet& s);
/// Pairwise disjoint closed neighborhoods.
bool is_packing(const Graph& g, const VertexSet& s);
/// Every vertex has at most one neighbor in s.
bool is_open_packing(const Graph& g, const VertexSet& s);
/// Induced subgraph has maximum degree <= 1.
bool is_2_independent(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);

/// Closed: u ~ v iff N[u] and N[v] meet. Open: u ~ v iff N(u) and N(v) meet.
/// Independent sets of the result are exactly the (open) packings of g.
Graph conflict_graph(const Graph& g, ConflictKind kind);

/// Exact alpha(g) by branch and bound (highest-degree branching, clique-cover bound).
InvariantResult max_independent_set(const Graph& g, const SearchLimits& limits = {});

InvariantResult rho(const Graph& g, const SearchLimits& limits = {});
InvariantResult rho_o(const Graph& g, const SearchLimits& limits = {});
InvariantResult packing_number(const Graph& g, ConflictKind kind, const SearchLimits& limits = {});
InvariantResult alpha2(const Graph& g, const SearchLimits& limits = {});
InvariantResult gamma(const Graph& g, const SearchLimits& limits = {});
/// Throws IsolatedVertex when the minimum degree is 0.
InvariantResult gamma_t(const Graph& g, const SearchLimits& limits = {});

/// Optimal weights of one side of the fractional domination LP pair.
struct FractionalSolution {
    Rational value;
    std::vector<Rational> weights;
};

/// min sum x  s.t. x(N[v]) >= 1 for all v, x >= 0.  Throws EmptyGraph for order 0.
FractionalSolution fractional_domination(const Graph& g);
/// max sum y  s.t. y(N[v]) <= 1 for all v, y >= 0 (the dual program).
FractionalSolution fractional_packing(const Graph& g);
Rational gamma_f(const Graph& g);

/// First-fit coloring along `order`; colors are 0-based.
std::vector<std::size_t> greedy_coloring(const Graph& g, const std::vector<Vertex>& order);
/// Vertices by non-increasing degree, ties by index.
std::vector<Vertex> welsh_powell_order(const Graph& g);
std::size_t color_count(const std::vector<std::size_t>& coloring);
bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& coloring);
/// A proper coloring with chromatic-number many colors.
std::vector<std::size_t> optimal_coloring(const Graph& g, const SearchLimits& limits = {});
std::size_t chromatic_number(const Graph& g, const SearchLimits& limits = {});

/// All maximum (open) packings, sorted lexicographically. Throws
/// EnumerationLimitExceeded when more than limits.enumeration_limit exist.
std::vector<VertexSet> enumerate_maximum(const Graph& g, ConflictKind kind, const SearchLimits& limits = {});

enum class Invariant { Rho, RhoOpen, Alpha2, Gamma, GammaTotal, GammaFractional, Chromatic };
std::string_view invariant_name(Invariant inv) noexcept;
Invariant parse_invariant(std::string_view name);

} // namespace packprod
