#pragma once

#include <optional>
#include <vector>

#include "spectraham/graph.hpp"
#include "spectraham/util.hpp"

namespace spectraham::testing {

// Plain recursive backtracking spanning-path search; deliberately independent
// of the bitmask DP it cross-checks.
inline bool backtrack_path(const Graph& g, int cur, int target, std::vector<bool>& used, int left) {
    if (left == 0) return target < 0 || cur == target;
    for (int nxt : g.neighbors(cur)) {
        if (used[nxt]) continue;
        if (target >= 0 && nxt == target && left > 1) continue;
        used[nxt] = true;
        if (backtrack_path(g, nxt, target, used, left - 1)) return true;
        used[nxt] = false;
    }
    return false;
}

inline bool reference_ham_path(const Graph& g, int u, int v) {
    if (g.order() == 1) return false;
    std::vector<bool> used(g.order(), false);
    used[u] = true;
    return backtrack_path(g, u, v, used, g.order() - 1);
}

inline bool reference_traceable_from(const Graph& g, int u) {
    if (g.order() == 1) return true;
    std::vector<bool> used(g.order(), false);
    used[u] = true;
    return backtrack_path(g, u, -1, used, g.order() - 1);
}

inline bool reference_traceable(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        if (reference_traceable_from(g, u)) return true;
    return false;
}

inline bool reference_hamiltonian(const Graph& g) {
    if (g.order() < 3) return false;
    for (int v : g.neighbors(0))
        if (reference_ham_path(g, 0, v)) return true;
    return false;
}

inline bool reference_hamilton_connected(const Graph& g) {
    int n = g.order();
    if (n == 1) return true;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!reference_ham_path(g, u, v)) return false;
    return true;
}

inline Graph random_graph(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

inline BipartiteGraph random_bipartite(int nx, int ny, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            if (rng.coin(p)) edges.push_back({x, y});
    return BipartiteGraph::from_edges(nx, ny, edges);
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, edges);
}

inline Graph petersen() {
    return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                  {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                  {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

// triangular prism: two triangles joined by a matching
inline Graph prism() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

} // namespace spectraham::testing
