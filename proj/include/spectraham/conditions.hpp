#pragma once

#include <optional>
#include <string>

#include "spectraham/graph.hpp"

namespace spectraham {

struct ConditionVerdict {
    std::string condition_id;
    bool satisfied = false;
    /// Violating nonadjacent pair (Ore-type failures).
    std::optional<Edge> violating_pair;
    /// The integer k witnessing a degree-sequence failure.
    std::optional<int> bad_k;
    /// Which branch fired for the bipartite edge condition.
    std::optional<std::string> branch;
    /// Both sides of the decisive inequality, when one was evaluated.
    std::optional<long long> edge_count;
    std::optional<long long> edge_threshold;
    /// Diagnostic only; never flips the verdict.
    std::optional<std::string> warning;
};

/// Ore-type sufficient condition: 2-connected and every nonadjacent pair has
/// degree sum >= n+1 implies Hamilton-connected.
ConditionVerdict ore_hamilton_connected(const Graph& g);

/// Degree-sequence sufficient condition on the ascending sequence d(v_1) <=
/// ... <= d(v_n): satisfied iff no integer 2 <= k <= n/2 has d(v_{k-1}) <= k
/// and d(v_{n-k}) <= n-k (1-based indices, exactly as stated).
ConditionVerdict degree_sequence_hc(const Graph& g);

/// Edge-count conditions for balanced (order 2n, Hamiltonian unless inside
/// B_n^k) and nearly balanced (order 2n-1, traceable unless inside C_n^k)
/// bipartite graphs. HypothesisNotMet when the preconditions fail, which is
/// distinct from the condition evaluating to false.
ConditionVerdict bipartite_edge_conditions(const BipartiteGraph& b, int k);

} // namespace spectraham
