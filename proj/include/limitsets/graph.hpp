#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace limitsets {

/// Adjacency lists over vertices 0..n-1. Successor lists are kept sorted so
/// that every traversal below is deterministic.
using Adjacency = std::vector<std::vector<std::size_t>>;

/// Tarjan's algorithm, iterative. Components come out in reverse topological
/// order of the condensation; each component's vertices are sorted.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Adjacency& graph);

/// Component id per vertex, numbered as in strongly_connected_components().
std::vector<std::size_t> component_ids(const Adjacency& graph,
                                       const std::vector<std::vector<std::size_t>>& components);

/// True if the component carries at least one edge (a cycle), i.e. it is more
/// than one vertex or a single vertex with a self-loop.
bool has_cycle(const Adjacency& graph, const std::vector<std::size_t>& component);

/// BFS shortest path from `from` to `to` (inclusive of both ends). Ties are
/// broken by the sorted successor order. An empty result means unreachable.
/// With from == to the path must use at least one edge.
std::vector<std::size_t> shortest_path(const Adjacency& graph, std::size_t from, std::size_t to);

/// Vertices lying on some bi-infinite path: the graph with vertices of zero
/// in- or out-degree removed until none remain.
std::vector<bool> bi_essential(const Adjacency& graph);

/// Vertices from which an infinite forward path starts.
std::vector<bool> forward_essential(const Adjacency& graph);

Adjacency reversed(const Adjacency& graph);

}  // namespace limitsets
