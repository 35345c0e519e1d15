#pragma once

#include <optional>
#include <vector>

#include "spectraham/graph.hpp"

namespace spectraham {

enum class MatrixKind { Adjacency, SignlessLaplacian };
enum class SolveMethod { Auto, Dense, ShiftedPowerIteration };

struct SpectralOptions {
    double tol = 1e-10;
    long max_iterations = 100000;
    SolveMethod method = SolveMethod::Auto;
    int dense_cap = 64; // Auto switches to power iteration above this order
};

/// Converged extreme eigenvalue with its certificate. For disconnected
/// graphs the value is the maximum over components and the vector is the
/// achieving component's Perron vector zero-padded elsewhere.
struct SpectralResult {
    MatrixKind kind = MatrixKind::Adjacency;
    double value = 0.0;
    std::vector<double> vector; // unit Euclidean norm
    double residual = 0.0;      // ||Mx - value·x||_inf over the whole graph
    long iterations = 0;
    SolveMethod method = SolveMethod::Dense;
};

/// μ(G): largest eigenvalue of the adjacency matrix.
SpectralResult adjacency_spectral_radius(const Graph& g, const SpectralOptions& opts = {});

/// q(G): largest eigenvalue of Q(G) = D(G) + A(G).
SpectralResult q_spectral_radius(const Graph& g, const SpectralOptions& opts = {});

/// Degree/edge-derived bounds; no eigensolve happens here. Bipartite-only
/// entries require x_size (vertices [0, x_size) form X, the rest Y, all
/// edges crossing). cone_lower is filled only when mu_for_cone is supplied
/// and refers to μ(G ∨ K1).
struct BoundsReport {
    std::optional<double> hong_shu_upper;
    std::optional<double> min_edge_geometric_lower;
    std::optional<double> cone_lower;
    std::optional<double> sqrt_edges_upper;
    std::optional<double> q_degree_upper;
    std::optional<double> q_edge_part_upper;
};

BoundsReport bounds_report(const Graph& g, std::optional<int> x_size = std::nullopt,
                           std::optional<double> mu_for_cone = std::nullopt);

/// f(x) = (x-1)/2 + sqrt(2m - n·x + (x+1)²/4); DomainError on negative
/// radicand.
double hong_shu_f(double x, int n, long long m);

/// Lower bound on μ(G ∨ K1) given μ(G) and n = |V(G)|.
double cone_lower_bound(double mu, int n);

} // namespace spectraham
