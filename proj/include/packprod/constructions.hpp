#pragma once

#include "packprod/products.hpp"
#include "packprod/solvers.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace packprod {

/// eta = ceil((diam(G) + 1) / 3); flag = 1 iff G != K2 and diam(H) = 2 (mod 3).
struct EtaValues {
    std::size_t eta = 0;
    std::size_t flag = 0;
};

/// Throws DisconnectedFactor unless both g and h are connected.
EtaValues eta_values(const Graph& g, const Graph& h);
bool is_k2(const Graph& g);

/// Lexicographically least pair at maximum distance joined by the BFS-tree path
/// (lowest-index parents). Throws DisconnectedFactor for disconnected g.
std::vector<Vertex> diametral_path(const Graph& g);

/// P_G^o x P_H over G box H: an open packing of size rho_o(G) * rho(H).
VertexSet cartesian_open_packing_product(const Graph& g, const Graph& h, const SearchLimits& limits = {});

/// Copies of a maximum open packing of G on the G-layers v1, v4, v7, ... of a
/// diametral path of H, plus (u, v_{diam+1}) for the lowest u outside it when the
/// correction flag is set. Size eta_H * rho_o(G) + flag.
VertexSet diametral_open_packing(const Graph& g, const Graph& h, const SearchLimits& limits = {});

/// G/S: one vertex per component of G[S], adjacent when the components are at distance exactly 2.
struct QuotientGraph {
    Graph graph;
    std::vector<VertexSet> parts;                    // component id -> vertices of G
    std::vector<std::optional<std::size_t>> part_of; // vertex of G -> component id, if in S
};

/// Throws NotTwoIndependent when s is not 2-independent in g.
QuotientGraph quotient_graph(const Graph& g, const VertexSet& s);

/// Open packing of size |S| = alpha2(G) in G box K_r, lifting a proper coloring of G/S.
/// Throws TriangleFound, BadParameters (r <= 2 or s not maximum), NotTwoIndependent, ChromaticExceedsR.
VertexSet gkr_open_packing(const Graph& g, std::size_t r, const VertexSet& s, const SearchLimits& limits = {});

/// Packing of G o H of size rho(G) + i_G (rho(H) - 1).
VertexSet lex_packing(const Graph& g, const Graph& h, const SearchLimits& limits = {});
/// Open packing of G o H; uses rho_o(G^-) when H has an isolated vertex and rho(G^-) otherwise.
VertexSet lex_open_packing(const Graph& g, const Graph& h, const SearchLimits& limits = {});

/// P_G x P_H over the strong product, size rho(G) rho(H).
VertexSet strong_packing(const Graph& g, const Graph& h, const SearchLimits& limits = {});
/// Size rho(G^-) rho(H^-) + i_G rho_o(H) + i_H rho_o(G) - i_G i_H.
VertexSet strong_open_packing(const Graph& g, const Graph& h, const SearchLimits& limits = {});

/// Larger of the two factor orderings plus every singleton of G x H.
VertexSet direct_packing(const Graph& g, const Graph& h, const SearchLimits& limits = {});
/// Size rho_o(G^-) rho_o(H^-) + i_G |V(H)| + i_H |V(G)| - i_G i_H.
VertexSet direct_open_packing(const Graph& g, const Graph& h, const SearchLimits& limits = {});

enum class RootedClassKind { A, B, CExact, CDeficient };
std::string_view rooted_class_name(RootedClassKind kind) noexcept;

/// Classification of a rooted graph (H, v) with its evidence.
///   A: `evidence` is a maximum open packing of H omitting v.
///   B: `evidence` is a maximum open packing containing v with no neighbour of v.
///   C_*: `evidence` is a maximum open packing of H* = H - N[v], lifted to V(H).
struct RootedClass {
    RootedClassKind kind = RootedClassKind::A;
    VertexSet evidence;
    std::size_t rho_o_h = 0;
    std::optional<std::size_t> rho_o_h_star;
    std::size_t maximum_count = 0; // number of maximum open packings of H
};

RootedClass classify_rooted(const Graph& h, Vertex v, const SearchLimits& limits = {});

/// True iff v lies in every maximum packing of h.
bool in_every_maximum_packing(const Graph& h, Vertex v, const SearchLimits& limits = {});

std::size_t rooted_rho(const Graph& g, const Graph& h, Vertex v, const SearchLimits& limits = {});
std::size_t rooted_rho_o(const Graph& g, const Graph& h, Vertex v, const SearchLimits& limits = {});
/// Packing (Closed) or open packing (Open) of G o_v H built by the matching proof case.
VertexSet rooted_witness(const Graph& g, const Graph& h, Vertex v, ConflictKind kind,
                         const SearchLimits& limits = {});

/// T = {(g_{i,j}, h_j)} over G_{r,t} box K_n; the pendant expansion uses `base` (order r).
/// Throws BadParameters unless r, t >= 2, n >= t and base has order r.
VertexSet prop_gap_witness(std::size_t r, std::size_t t, std::size_t n, const Graph& base);

} // namespace packprod
