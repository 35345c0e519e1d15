#include "spectraham/conditions.hpp"

#include <algorithm>

namespace spectraham {

ConditionVerdict ore_hamilton_connected(const Graph& g) {
    int n = g.order();
    if (n < 3) raise(ErrorCode::DomainError, "Ore-type condition needs order >= 3");
    ConditionVerdict verdict;
    verdict.condition_id = "ore_hamilton_connected";
    if (!g.is_two_connected()) {
        verdict.satisfied = false;
        verdict.warning = "not 2-connected";
        return verdict;
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (g.degree(u) + g.degree(v) < n + 1) {
                verdict.satisfied = false;
                verdict.violating_pair = Edge{u, v};
                return verdict;
            }
        }
    }
    verdict.satisfied = true;
    return verdict;
}

ConditionVerdict degree_sequence_hc(const Graph& g) {
    int n = g.order();
    if (n < 3) raise(ErrorCode::DomainError, "degree-sequence condition needs order >= 3");
    ConditionVerdict verdict;
    verdict.condition_id = "degree_sequence_hc";
    // stated without a connectivity hypothesis; flag rather than guess
    if (!g.is_two_connected()) verdict.warning = "input is not 2-connected";

    std::vector<int> d = g.degrees();
    std::sort(d.begin(), d.end());
    for (int k = 2; 2 * k <= n; ++k) {
        if (d[k - 2] <= k && d[n - k - 1] <= n - k) { // d(v_{k-1}), d(v_{n-k}) 1-based
            verdict.satisfied = false;
            verdict.bad_k = k;
            return verdict;
        }
    }
    verdict.satisfied = true;
    return verdict;
}

ConditionVerdict bipartite_edge_conditions(const BipartiteGraph& b, int k) {
    ConditionVerdict verdict;
    verdict.condition_id = "bipartite_edge_conditions";
    bool balanced = b.balanced();
    bool nearly = b.nearly_balanced();
    if (!balanced && !nearly)
        raise(ErrorCode::HypothesisNotMet, "input is neither balanced nor nearly balanced (|X| = |Y| - 1)");
    long long n = b.y_size();
    if (k < 1) raise(ErrorCode::HypothesisNotMet, "needs k >= 1");
    if (b.order() == 0 || b.min_degree() < k)
        raise(ErrorCode::HypothesisNotMet, "minimum degree below k");
    if (n < 2 * k + 1) raise(ErrorCode::HypothesisNotMet, "needs n >= 2k+1");

    long long e = b.edge_count();
    long long threshold = balanced ? n * (n - k - 1) + static_cast<long long>(k + 1) * (k + 1)
                                   : n * (n - k - 2) + static_cast<long long>(k + 1) * (k + 1);
    verdict.branch = balanced ? "balanced" : "nearly_balanced";
    verdict.edge_count = e;
    verdict.edge_threshold = threshold;
    verdict.satisfied = e > threshold;
    return verdict;
}

} // namespace spectraham
