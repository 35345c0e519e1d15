#include "spectraham/closure.hpp"

#include <set>

namespace spectraham {

namespace {

// Worklist of candidate pairs kept in processing order. A popped pair that
// fails the threshold is dropped; joins re-enqueue every nonadjacent pair
// incident to either endpoint, whose degree sums just changed.
template <typename PairLess, typename DegreeSumFn, typename NonEdgesOfFn, typename JoinFn>
std::vector<Edge> run_worklist(std::set<Edge, PairLess> queue, DegreeSumFn degree_sum,
                               NonEdgesOfFn non_edges_of, JoinFn join_pair, int threshold) {
    std::vector<Edge> added;
    while (!queue.empty()) {
        Edge e = *queue.begin();
        queue.erase(queue.begin());
        if (degree_sum(e) < threshold) continue;
        join_pair(e);
        added.push_back(e);
        for (int endpoint : {e.first, e.second})
            for (const Edge& cand : non_edges_of(endpoint)) queue.insert(cand);
    }
    return added;
}

} // namespace

ClosureResult<Graph> k_closure(const Graph& g, int k, ClosureOrder order) {
    if (k < 0) raise(ErrorCode::InvalidArgument, "closure threshold must be nonnegative");
    GraphBuilder builder(g.order());
    for (const auto& [u, v] : g.edges()) builder.add_edge(u, v);
    std::vector<int> deg = g.degrees();
    int n = g.order();

    auto canon = [](int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; };
    auto all_non_edges = [&]() {
        std::vector<Edge> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!builder.has_edge(u, v)) out.emplace_back(u, v);
        return out;
    };

    auto run = [&](auto less) {
        std::set<Edge, decltype(less)> queue(less);
        for (const Edge& e : all_non_edges()) queue.insert(e);
        return run_worklist(
            std::move(queue), [&](const Edge& e) { return deg[e.first] + deg[e.second]; },
            [&](int endpoint) {
                std::vector<Edge> out;
                for (int v = 0; v < n; ++v)
                    if (v != endpoint && !builder.has_edge(endpoint, v)) out.push_back(canon(endpoint, v));
                return out;
            },
            [&](const Edge& e) {
                builder.add_edge(e.first, e.second);
                ++deg[e.first];
                ++deg[e.second];
            },
            k);
    };

    std::vector<Edge> added = order == ClosureOrder::Lexicographic
                                  ? run(std::less<Edge>())
                                  : run([](const Edge& a, const Edge& b) { return b < a; });
    return {std::move(builder).freeze(), std::move(added), k};
}

ClosureResult<BipartiteGraph> bipartite_closure(const BipartiteGraph& b, ClosureOrder order) {
    if (!b.balanced())
        raise(ErrorCode::NotBalanced, "bipartite closure requires |X| = |Y| (got " +
                                          std::to_string(b.x_size()) + ", " + std::to_string(b.y_size()) + ")");
    int n = b.x_size();
    int threshold = n + 1;
    BipartiteGraph work = b;
    std::vector<int> dx(n), dy(n);
    for (int x = 0; x < n; ++x) dx[x] = b.degree_x(x);
    for (int y = 0; y < n; ++y) dy[y] = b.degree_y(y);

    auto run = [&](auto less) {
        std::set<Edge, decltype(less)> queue(less);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (!work.has_edge(x, y)) queue.insert({x, y});
        std::vector<Edge> added;
        while (!queue.empty()) {
            Edge e = *queue.begin();
            queue.erase(queue.begin());
            if (dx[e.first] + dy[e.second] < threshold) continue;
            work = work.with_edge(e.first, e.second);
            ++dx[e.first];
            ++dy[e.second];
            added.push_back(e);
            for (int y = 0; y < n; ++y)
                if (!work.has_edge(e.first, y)) queue.insert({e.first, y});
            for (int x = 0; x < n; ++x)
                if (!work.has_edge(x, e.second)) queue.insert({x, e.second});
        }
        return added;
    };

    std::vector<Edge> added = order == ClosureOrder::Lexicographic
                                  ? run(std::less<Edge>())
                                  : run([](const Edge& a, const Edge& b2) { return b2 < a; });
    return {std::move(work), std::move(added), n};
}

} // namespace spectraham
