#pragma once

#include "packprod/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace packprod {

/// Canonical adjacency code of a graph with at most 11 vertices: the minimum,
/// over degree-respecting relabelings, of the upper-triangle adjacency bits.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class on exactly n vertices (n <= 8),
/// built by vertex augmentation. When `keep` is given it must be hereditary
/// (closed under vertex deletion); only graphs satisfying it are generated.
std::vector<Graph> all_graphs(std::size_t n, const std::function<bool(const Graph&)>& keep = {});
std::vector<Graph> connected_graphs(std::size_t n);
std::vector<Graph> bipartite_connected_graphs(std::size_t n);

/// Canonical string of a tree (rooted at its center), used for deduplication.
std::string tree_code(const Graph& tree);
/// Non-isomorphic trees on exactly n vertices (n >= 1).
std::vector<Graph> trees(std::size_t n);

} // namespace packprod
