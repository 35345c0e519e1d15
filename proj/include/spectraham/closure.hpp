#pragma once

#include <vector>

#include "spectraham/graph.hpp"

namespace spectraham {

enum class ClosureOrder { Lexicographic, ReverseLexicographic };

template <typename G>
struct ClosureResult {
    G closed_graph;
    std::vector<Edge> added_edges; // in join order
    int parameter = 0;             // k, or n for the bipartite closure
};

/// k-closure C_k(G): join nonadjacent pairs with degree sum >= k until none
/// remain. The closed graph is order-independent; the trace follows the
/// requested processing order.
ClosureResult<Graph> k_closure(const Graph& g, int k, ClosureOrder order = ClosureOrder::Lexicographic);

/// Bipartite closure cl_B(G) of a balanced bipartite graph of order 2n:
/// joins nonadjacent cross pairs with degree sum >= n+1. NotBalanced for
/// unbalanced input.
ClosureResult<BipartiteGraph> bipartite_closure(const BipartiteGraph& b,
                                                ClosureOrder order = ClosureOrder::Lexicographic);

} // namespace spectraham
