#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "spectraham/spectral.hpp"
#include "test_support.hpp"

using namespace spectraham;
namespace st = spectraham::testing;

namespace {

double mu(const Graph& g) { return adjacency_spectral_radius(g).value; }
double qv(const Graph& g) { return q_spectral_radius(g).value; }

} // namespace

TEST_CASE("closed-form spectra") {
    for (int n = 1; n <= 12; ++n) CHECK(mu(Graph::complete(n)) == doctest::Approx(n - 1.0).epsilon(1e-12));
    CHECK(mu(Graph::complete(5)) == doctest::Approx(4.0));
    CHECK(mu(join(Graph::empty(2), Graph::empty(4))) == doctest::Approx(std::sqrt(8.0)));
    CHECK(qv(Graph::complete(4)) == doctest::Approx(6.0));
    CHECK(qv(join(Graph::empty(3), Graph::empty(2))) == doctest::Approx(5.0));
    CHECK(qv(Graph::empty(6)) == doctest::Approx(0.0));
    // cycles: mu = 2, q = 4
    CHECK(mu(st::cycle_graph(7)) == doctest::Approx(2.0));
    CHECK(qv(st::cycle_graph(7)) == doctest::Approx(4.0));
}

TEST_CASE("residual certificate and positive Perron vector") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = st::random_graph(rng.int_in(1, 20), rng.u01(), rng);
        for (MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::SignlessLaplacian}) {
            SpectralResult r = kind == MatrixKind::Adjacency ? adjacency_spectral_radius(g)
                                                             : q_spectral_radius(g);
            CHECK(r.residual <= 1e-9);
            double norm = 0;
            for (double x : r.vector) norm += x * x;
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
            if (g.is_connected() && g.order() >= 1) {
                for (double x : r.vector) CHECK(x > 0.0);
            }
        }
    }
}

TEST_CASE("disconnected graphs take the component maximum") {
    Graph g = disjoint_union(Graph::complete(4), st::cycle_graph(5));
    SpectralResult r = adjacency_spectral_radius(g);
    CHECK(r.value == doctest::Approx(3.0));
    // vector lives on the K4 component, zero elsewhere
    for (int v = 0; v < 4; ++v) CHECK(r.vector[v] > 0.0);
    for (int v = 4; v < 9; ++v) CHECK(r.vector[v] == doctest::Approx(0.0));

    // two equal components: deterministic first choice
    Graph twin = disjoint_union(Graph::complete(3), Graph::complete(3));
    SpectralResult t = adjacency_spectral_radius(twin);
    CHECK(t.value == doctest::Approx(2.0));
    CHECK(t.vector[0] > 0.0);
    CHECK(t.vector[3] == doctest::Approx(0.0));
}

TEST_CASE("dense and power iteration agree") {
    Rng rng(77);
    SpectralOptions dense;
    dense.method = SolveMethod::Dense;
    SpectralOptions power;
    power.method = SolveMethod::ShiftedPowerIteration;
    power.tol = 1e-11;
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.int_in(2, 32);
        Graph g = st::random_graph(n, 0.2 + 0.6 * rng.u01(), rng);
        CHECK(adjacency_spectral_radius(g, dense).value ==
              doctest::Approx(adjacency_spectral_radius(g, power).value).epsilon(1e-7));
        CHECK(q_spectral_radius(g, dense).value ==
              doctest::Approx(q_spectral_radius(g, power).value).epsilon(1e-7));
    }
    // bipartite inputs exercise the +I shift against the ±mu pairing
    for (int trial = 0; trial < 40; ++trial) {
        BipartiteGraph b = st::random_bipartite(rng.int_in(1, 8), rng.int_in(1, 8), 0.6, rng);
        Graph g = b.embed();
        CHECK(adjacency_spectral_radius(g, dense).value ==
              doctest::Approx(adjacency_spectral_radius(g, power).value).epsilon(1e-7));
    }
    // a few samples at the dense cap itself
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = st::random_graph(56 + 2 * trial, 0.2 + 0.1 * trial, rng);
        CHECK(adjacency_spectral_radius(g, dense).value ==
              doctest::Approx(adjacency_spectral_radius(g, power).value).epsilon(1e-7));
    }
    Graph big = st::random_graph(80, 0.3, rng); // above the dense cap: Auto = power
    SpectralResult r = adjacency_spectral_radius(big);
    CHECK(r.method == SolveMethod::ShiftedPowerIteration);
    CHECK(r.residual <= 1e-9);
}

TEST_CASE("Rayleigh identities on the returned eigenvector") {
    // x'Ax = 2 sum_{uv in E} x_u x_v equals mu for the unit Perron vector,
    // and q = sum_{uv in E} (x_u + x_v)^2 (no leading 2 in the q identity)
    Rng rng(314);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = st::random_graph(rng.int_in(2, 16), 0.2 + 0.7 * rng.u01(), rng);
        SpectralResult a = adjacency_spectral_radius(g);
        double sum_a = 0;
        for (const auto& [u, v] : g.edges()) sum_a += a.vector[u] * a.vector[v];
        CHECK(2.0 * sum_a == doctest::Approx(a.value).epsilon(1e-8));

        SpectralResult q = q_spectral_radius(g);
        double sum_q = 0;
        for (const auto& [u, v] : g.edges()) {
            double s = q.vector[u] + q.vector[v];
            sum_q += s * s;
        }
        CHECK(sum_q == doctest::Approx(q.value).epsilon(1e-8));
    }
}

TEST_CASE("non-convergence carries the best estimate") {
    SpectralOptions opts;
    opts.method = SolveMethod::ShiftedPowerIteration;
    opts.max_iterations = 2;
    Rng rng(6);
    Graph g = st::random_graph(40, 0.4, rng);
    try {
        adjacency_spectral_radius(g, opts);
        FAIL_CHECK("expected ConvergenceFailure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConvergenceFailure);
        CHECK(std::string(e.what()).find("estimate") != std::string::npos);
    }
}

TEST_CASE("edge monotonicity of the spectral radius") {
    Rng rng(99);
    int done = 0;
    while (done < 150) {
        int n = rng.int_in(3, 20);
        Graph g = st::random_graph(n, 0.3 + 0.5 * rng.u01(), rng);
        if (!g.is_connected()) continue;
        int u = rng.int_in(0, n - 1), v = rng.int_in(0, n - 1);
        if (u == v || g.has_edge(u, v)) continue;
        Graph plus = g.with_edge(u, v);
        CHECK(mu(plus) >= mu(g) + 1e-10);
        ++done;
    }
}

TEST_CASE("hong_shu_f arithmetic and monotonicity") {
    CHECK(hong_shu_f(3, 4, 6) == doctest::Approx(3.0));
    CHECK(hong_shu_f(5, 6, 15) == doctest::Approx(5.0)); // complete-graph endpoint n-1
    CHECK_THROWS_AS(hong_shu_f(10, 50, 0), Error);       // negative radicand

    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng.int_in(4, 30);
        long long max_m = static_cast<long long>(n) * (n - 1) / 2;
        long long m = max_m - 1 - static_cast<long long>(rng.below(max_m / 4 + 1));
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 100; ++i) {
            double x = (n - 1) * (i / 100.0);
            double radicand = 2.0 * m - static_cast<double>(n) * x + (x + 1) * (x + 1) / 4.0;
            if (radicand < 0) break;
            double fx = hong_shu_f(x, n, m);
            CHECK(fx < prev + 1e-12);
            if (i > 0) CHECK(fx < prev); // strict while 2m < n(n-1)
            prev = fx;
        }
    }
}

TEST_CASE("cone lower bound") {
    CHECK(cone_lower_bound(3.0, 4) == doctest::Approx(9.0 / 4 + 2 * std::sqrt(3.0) / 4));
    CHECK(mu(Graph::complete(5)) > cone_lower_bound(3.0, 4));
    CHECK(cone_lower_bound(0.0, 3) == doctest::Approx(2 * std::sqrt(2.0) / 3));
    CHECK(mu(Graph::empty(3).add_cone()) > cone_lower_bound(0.0, 3));
    Graph k24 = join(Graph::empty(2), Graph::empty(4));
    CHECK(mu(k24.add_cone()) > cone_lower_bound(std::sqrt(8.0), 6));

    Rng rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = st::random_graph(rng.int_in(2, 14), rng.u01(), rng);
        double bound = cone_lower_bound(mu(g), g.order());
        CHECK(mu(g.add_cone()) > bound);
    }
}

TEST_CASE("bounds report sandwiches") {
    BoundsReport k4 = bounds_report(Graph::complete(4));
    CHECK(*k4.hong_shu_upper == doctest::Approx(3.0));

    Graph star = Graph::empty(3).add_cone();
    BoundsReport s = bounds_report(star);
    CHECK(*s.min_edge_geometric_lower == doctest::Approx(std::sqrt(3.0)));
    CHECK(mu(star) == doctest::Approx(std::sqrt(3.0))); // bipartite semi-regular: tight

    Graph k33 = join(Graph::empty(3), Graph::empty(3));
    BoundsReport b33 = bounds_report(k33, 3);
    CHECK(*b33.sqrt_edges_upper == doctest::Approx(3.0));
    CHECK(*b33.q_edge_part_upper == doctest::Approx(6.0));
    CHECK(qv(k33) == doctest::Approx(6.0));

    CHECK_FALSE(bounds_report(Graph::empty(4)).min_edge_geometric_lower.has_value());
    CHECK_FALSE(bounds_report(Graph::empty(4)).q_degree_upper.has_value());
    CHECK_THROWS_AS(bounds_report(Graph::empty(0)), Error);

    Rng rng(123);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = rng.int_in(1, 24);
        Graph g = st::random_graph(n, rng.u01(), rng);
        BoundsReport r = bounds_report(g);
        double m = mu(g);
        CHECK(m <= *r.hong_shu_upper + 1e-8);
        if (r.min_edge_geometric_lower) CHECK(m >= *r.min_edge_geometric_lower - 1e-8);
        if (r.q_degree_upper) CHECK(qv(g) <= *r.q_degree_upper + 1e-8);
    }
    for (int trial = 0; trial < 800; ++trial) {
        int nx = rng.int_in(1, 8), ny = rng.int_in(1, 8);
        BipartiteGraph b = st::random_bipartite(nx, ny, rng.u01(), rng);
        Graph g = b.embed();
        BoundsReport r = bounds_report(g, nx);
        CHECK(mu(g) <= *r.sqrt_edges_upper + 1e-8);
        CHECK(qv(g) <= *r.q_edge_part_upper + 1e-8);
    }
}

TEST_CASE("lemma 2.6 equality cases") {
    Rng rng(55);
    // connected regular samples: circulant-style cycles and complete graphs
    for (int n : {4, 5, 7, 9}) {
        Graph c = st::cycle_graph(n);
        BoundsReport r = bounds_report(c);
        CHECK(mu(c) == doctest::Approx(*r.min_edge_geometric_lower).epsilon(1e-8));
    }
    for (int n : {3, 5, 8}) {
        Graph k = Graph::complete(n);
        BoundsReport r = bounds_report(k);
        CHECK(mu(k) == doctest::Approx(*r.min_edge_geometric_lower).epsilon(1e-8));
    }
    for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 5; ++b) {
            Graph kab = join(Graph::empty(a), Graph::empty(b));
            BoundsReport r = bounds_report(kab);
            CHECK(mu(kab) == doctest::Approx(*r.min_edge_geometric_lower).epsilon(1e-8));
        }
}

TEST_CASE("part mask validation") {
    Graph k33 = join(Graph::empty(3), Graph::empty(3));
    CHECK_THROWS_AS(bounds_report(k33, 2), Error); // edges within the claimed Y part
    CHECK_THROWS_AS(bounds_report(Graph::complete(3), 1), Error);
}
