#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "spectraham/graph.hpp"
#include "test_support.hpp"

using namespace spectraham;
namespace st = spectraham::testing;

TEST_CASE("from_edges basics") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(graph_stats(p3).degree_sequence == std::vector<int>{1, 1, 2});

    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4 == Graph::complete(4));
    CHECK(k4.edge_count() == 6);

    Graph nothing = Graph::from_edges(0, std::initializer_list<Edge>{});
    CHECK(nothing.order() == 0);
    CHECK(nothing.edge_count() == 0);

    // duplicates collapse
    Graph dup = Graph::from_edges(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("from_edges rejects bad input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), Error);
    try {
        Graph::from_edges(3, {{1, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidEdge);
    }
    try {
        Graph::from_edges(3, {{0, 5}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidVertex);
    }
}

TEST_CASE("complement") {
    CHECK(Graph::complete(4).complement() == Graph::empty(4));
    Graph p3 = st::path_graph(3);
    CHECK(p3.complement().complement() == p3);
    // complement of K_{2,3} is K2 + K3
    Graph k23 = join(Graph::empty(2), Graph::empty(3));
    Graph comp = k23.complement();
    CHECK(comp.edge_count() == 1 + 3);
    CHECK(comp == disjoint_union(Graph::complete(2), Graph::complete(3)));
}

TEST_CASE("join and disjoint union") {
    Graph k23 = join(Graph::empty(2), Graph::empty(3));
    CHECK(k23.order() == 5);
    CHECK(k23.edge_count() == 6);

    Graph thm210 = join(Graph::complete(2), disjoint_union(Graph::complete(6), Graph::complete(1)));
    CHECK(thm210.order() == 9);
    CHECK(thm210.edge_count() == 30);
    auto stats = graph_stats(thm210);
    CHECK(stats.degree_sequence == std::vector<int>{2, 7, 7, 7, 7, 7, 7, 8, 8});

    CHECK(disjoint_union(Graph::complete(3), Graph::complete(3)).edge_count() == 6);
    Rng rng(11);
    Graph g = st::random_graph(7, 0.4, rng);
    CHECK(disjoint_union(g, Graph::empty(0)) == g);
    // complement of K4 + K4 is K_{4,4}
    Graph two_k4 = disjoint_union(Graph::complete(4), Graph::complete(4));
    CHECK(two_k4.complement() == join(Graph::empty(4), Graph::empty(4)));
}

TEST_CASE("join edge count identity on random pairs") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int n1 = rng.int_in(0, 6), n2 = rng.int_in(0, 6);
        Graph a = st::random_graph(n1, rng.u01(), rng);
        Graph b = st::random_graph(n2, rng.u01(), rng);
        Graph j = join(a, b);
        CHECK(j.edge_count() ==
              a.edge_count() + b.edge_count() + static_cast<long long>(n1) * n2);
    }
}

TEST_CASE("add_cone") {
    CHECK(Graph::empty(3).add_cone() == join(Graph::complete(1), Graph::empty(3)));
    CHECK(Graph::complete(4).add_cone() == Graph::complete(5));
    Graph star = Graph::empty(3).add_cone();
    CHECK(graph_stats(star).degree_sequence == std::vector<int>{1, 1, 1, 3});
}

TEST_CASE("graph_stats flags") {
    auto p3 = graph_stats(st::path_graph(3));
    CHECK(p3.connected);
    CHECK_FALSE(p3.two_connected);

    auto k5 = graph_stats(Graph::complete(5));
    CHECK(k5.min_degree == 4);
    CHECK(k5.two_connected);

    CHECK_FALSE(graph_stats(Graph::complete(2)).two_connected); // order <= 2 convention
    CHECK(graph_stats(st::cycle_graph(4)).two_connected);
    CHECK_FALSE(graph_stats(disjoint_union(Graph::complete(3), Graph::complete(3))).connected);
    CHECK_THROWS_AS(graph_stats(Graph::empty(0)), Error);

    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = st::random_graph(rng.int_in(1, 12), rng.u01(), rng);
        auto s = graph_stats(g);
        long long sum = std::accumulate(s.degree_sequence.begin(), s.degree_sequence.end(), 0LL);
        CHECK(sum == 2 * s.edge_count);
        CHECK(std::is_sorted(s.degree_sequence.begin(), s.degree_sequence.end()));
    }
}

TEST_CASE("two-connectivity agrees with the vertex-deletion definition") {
    auto reference = [](const Graph& g) {
        if (g.order() <= 2) return false;
        if (!g.is_connected()) return false;
        for (int v = 0; v < g.order(); ++v)
            if (!g.remove_vertex(v).is_connected()) return false;
        return true;
    };
    Rng rng(23);
    for (int trial = 0; trial < 600; ++trial) {
        Graph g = st::random_graph(rng.int_in(1, 11), rng.u01(), rng);
        CHECK(g.is_two_connected() == reference(g));
    }
    CHECK(st::cycle_graph(3).is_two_connected());
    Graph two_triangles_sharing = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    CHECK_FALSE(two_triangles_sharing.is_two_connected()); // cut vertex 2
}

TEST_CASE("bipartite basics and quasi-complement") {
    BipartiteGraph k23 = BipartiteGraph::complete(2, 3);
    CHECK(k23.quasi_complement() == BipartiteGraph::empty(2, 3));
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        BipartiteGraph b = st::random_bipartite(rng.int_in(0, 5), rng.int_in(0, 5), rng.u01(), rng);
        CHECK(b.quasi_complement().quasi_complement() == b);
    }
    CHECK(BipartiteGraph::empty(2, 3).nearly_balanced());
    CHECK_FALSE(BipartiteGraph::empty(3, 2).nearly_balanced()); // parts are ordered
    CHECK(BipartiteGraph::complete(3, 3).balanced());
}

TEST_CASE("bipartite sqcup edge counts match the closed forms") {
    // B_6^2 = O_{2,4} ⊔ K_{4,2}
    BipartiteGraph b62 = bipartite_sqcup(BipartiteGraph::empty(2, 4), BipartiteGraph::complete(4, 2));
    CHECK(b62.order() == 12);
    CHECK(b62.edge_count() == 28);
    // C_6^2 = O_{2,4} ⊔ K_{3,2}
    BipartiteGraph c62 = bipartite_sqcup(BipartiteGraph::empty(2, 4), BipartiteGraph::complete(3, 2));
    CHECK(c62.order() == 11);
    CHECK(c62.edge_count() == 22);
    auto stats = graph_stats(c62.embed());
    CHECK(stats.degree_sequence == std::vector<int>{2, 2, 3, 3, 3, 3, 5, 5, 6, 6, 6});
    CHECK(stats.min_degree == 2);

    // O_{1,1} ⊔ O_{1,1} is the 4-cycle
    BipartiteGraph c4 = bipartite_sqcup(BipartiteGraph::empty(1, 1), BipartiteGraph::empty(1, 1));
    CHECK(c4.edge_count() == 2);
    auto embedded = graph_stats(c4.embed());
    CHECK(embedded.degree_sequence == std::vector<int>{1, 1, 1, 1});

    for (int n = 2; n <= 20; ++n) {
        for (int k = 1; 2 * k <= n; ++k) {
            BipartiteGraph bnk =
                bipartite_sqcup(BipartiteGraph::empty(k, n - k), BipartiteGraph::complete(n - k, k));
            CHECK(bnk.edge_count() == static_cast<long long>(n) * (n - k) + static_cast<long long>(k) * k);
            BipartiteGraph cnk =
                bipartite_sqcup(BipartiteGraph::empty(k, n - k), BipartiteGraph::complete(n - k - 1, k));
            CHECK(cnk.edge_count() == static_cast<long long>(n) * (n - k - 1) + static_cast<long long>(k) * k);
        }
    }
}

TEST_CASE("embed round-trips and preserves degrees") {
    CHECK(BipartiteGraph::complete(3, 3).embed().degrees() == std::vector<int>(6, 3));
    CHECK(BipartiteGraph::empty(2, 3).embed() == Graph::empty(5));

    Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        BipartiteGraph b = st::random_bipartite(rng.int_in(1, 6), rng.int_in(1, 6), rng.u01(), rng);
        Graph g = b.embed();
        CHECK(g.edge_count() == b.edge_count());
        CHECK(BipartiteGraph::from_embedding(g, b.x_size()) == b);
        std::vector<int> expect;
        for (int x = 0; x < b.x_size(); ++x) expect.push_back(b.degree_x(x));
        for (int y = 0; y < b.y_size(); ++y) expect.push_back(b.degree_y(y));
        CHECK(g.degrees() == expect);
    }
}

TEST_CASE("cone over a part") {
    // a nearly balanced graph gains a vertex adjacent to all of Y
    BipartiteGraph c = bipartite_sqcup(BipartiteGraph::empty(1, 3), BipartiteGraph::complete(2, 1));
    CHECK(c.nearly_balanced());
    BipartiteGraph coned = c.cone_over_y();
    CHECK(coned.balanced());
    CHECK(coned.degree_x(coned.x_size() - 1) == coned.y_size());
    CHECK(coned.edge_count() == c.edge_count() + c.y_size());
}

TEST_CASE("induced subgraphs and vertex removal") {
    Graph k5 = Graph::complete(5);
    std::vector<int> sub{0, 2, 4};
    CHECK(k5.induced(sub) == Graph::complete(3));
    CHECK(k5.remove_vertex(0) == Graph::complete(4));
}
