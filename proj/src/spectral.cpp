#include "spectraham/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace spectraham {

namespace {

struct ComponentSolve {
    double value = 0.0;
    std::vector<double> vec;
    long iterations = 0;
    SolveMethod method = SolveMethod::Dense;
};

// y = M x on the induced component, M = A or Q.
void multiply(const Graph& g, MatrixKind kind, const std::vector<double>& x, std::vector<double>& y) {
    int n = g.order();
    for (int v = 0; v < n; ++v) {
        double acc = 0.0;
        for (int u : g.neighbors(v)) acc += x[u];
        if (kind == MatrixKind::SignlessLaplacian) acc += static_cast<double>(g.degree(v)) * x[v];
        y[v] = acc;
    }
}

double residual_inf(const Graph& g, MatrixKind kind, const std::vector<double>& x, double lambda) {
    int n = g.order();
    std::vector<double> y(n);
    multiply(g, kind, x, y);
    double r = 0.0;
    for (int v = 0; v < n; ++v) r = std::max(r, std::abs(y[v] - lambda * x[v]));
    return r;
}

void normalize(std::vector<double>& x) {
    double s = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    if (s > 0.0)
        for (double& v : x) v /= s;
}

// Cyclic Jacobi on a dense symmetric matrix; returns the largest eigenpair.
ComponentSolve jacobi_largest(const Graph& g, MatrixKind kind) {
    int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) a[static_cast<std::size_t>(v) * n + u] = 1.0;
        if (kind == MatrixKind::SignlessLaplacian)
            a[static_cast<std::size_t>(v) * n + v] = static_cast<double>(g.degree(v));
    }
    std::vector<double> vmat(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vmat[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto vat = [&](int i, int j) -> double& { return vmat[static_cast<std::size_t>(i) * n + j]; };

    long rotations = 0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
        if (off < 1e-14 * std::max(1.0, static_cast<double>(2 * n))) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = vat(i, p), viq = vat(i, q);
                    vat(i, p) = c * vip - s * viq;
                    vat(i, q) = s * vip + c * viq;
                }
                ++rotations;
            }
        }
    }

    int best = 0;
    for (int i = 1; i < n; ++i)
        if (at(i, i) > at(best, best)) best = i;

    ComponentSolve out;
    out.value = at(best, best);
    out.vec.resize(n);
    for (int i = 0; i < n; ++i) out.vec[i] = vat(i, best);
    out.iterations = rotations;
    out.method = SolveMethod::Dense;
    normalize(out.vec);
    double sum = std::accumulate(out.vec.begin(), out.vec.end(), 0.0);
    if (sum < 0)
        for (double& v : out.vec) v = -v;
    return out;
}

// Shifted power iteration on M + I; the shift makes the iteration matrix
// primitive per connected component, so bipartite ±μ oscillation cannot
// stall convergence.
ComponentSolve power_largest(const Graph& g, MatrixKind kind, const SpectralOptions& opts) {
    int n = g.order();
    ComponentSolve out;
    out.method = SolveMethod::ShiftedPowerIteration;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double value = 0.0;
    for (long it = 1; it <= opts.max_iterations; ++it) {
        multiply(g, kind, x, y);
        for (int v = 0; v < n; ++v) y[v] += x[v]; // (M + I) x
        double rho = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        value = rho - 1.0;
        double r = 0.0;
        for (int v = 0; v < n; ++v) r = std::max(r, std::abs(y[v] - rho * x[v]));
        if (r <= opts.tol) {
            out.value = value;
            out.vec = x;
            out.iterations = it;
            return out;
        }
        x = y;
        normalize(x);
    }
    raise(ErrorCode::ConvergenceFailure,
          "power iteration did not reach tol " + std::to_string(opts.tol) + " within " +
              std::to_string(opts.max_iterations) + " iterations; best estimate " + std::to_string(value) +
              ", residual " + std::to_string(residual_inf(g, kind, x, value)));
}

// Restore strict positivity of a Perron vector that Jacobi may return with
// roundoff-negative entries: a few primitive-matrix steps from |x|.
void polish_positive(const Graph& g, MatrixKind kind, std::vector<double>& x) {
    for (double& v : x) v = std::abs(v);
    normalize(x);
    std::vector<double> y(x.size());
    for (int step = 0; step < 2 * g.order() + 4; ++step) {
        bool all_positive = std::all_of(x.begin(), x.end(), [](double v) { return v > 0.0; });
        if (all_positive) return;
        multiply(g, kind, x, y);
        for (std::size_t v = 0; v < x.size(); ++v) y[v] += x[v];
        x = y;
        normalize(x);
    }
}

ComponentSolve solve_connected(const Graph& g, MatrixKind kind, const SpectralOptions& opts) {
    int n = g.order();
    if (n == 1) {
        ComponentSolve out;
        out.value = 0.0;
        out.vec = {1.0};
        out.method = SolveMethod::Dense;
        return out;
    }
    SolveMethod method = opts.method;
    if (method == SolveMethod::Auto)
        method = n <= opts.dense_cap ? SolveMethod::Dense : SolveMethod::ShiftedPowerIteration;
    if (method == SolveMethod::ShiftedPowerIteration) return power_largest(g, kind, opts);

    ComponentSolve out = jacobi_largest(g, kind);
    bool positive = std::all_of(out.vec.begin(), out.vec.end(), [](double v) { return v > 0.0; });
    if (!positive && g.edge_count() > 0) {
        polish_positive(g, kind, out.vec);
        std::vector<double> y(out.vec.size());
        multiply(g, kind, out.vec, y);
        out.value = std::inner_product(out.vec.begin(), out.vec.end(), y.begin(), 0.0);
    }
    return out;
}

SpectralResult solve(const Graph& g, MatrixKind kind, const SpectralOptions& opts) {
    if (g.order() < 1) raise(ErrorCode::EmptyGraph, "spectral radius of empty graph");
    auto comps = g.components();

    SpectralResult result;
    result.kind = kind;
    result.vector.assign(g.order(), 0.0);

    ComponentSolve best;
    const std::vector<int>* best_comp = nullptr;
    for (const auto& comp : comps) {
        Graph sub = g.induced(comp);
        ComponentSolve cs = solve_connected(sub, kind, opts);
        if (best_comp == nullptr || cs.value > best.value + 0.0) {
            best = cs;
            best_comp = &comp;
        }
    }
    for (std::size_t i = 0; i < best_comp->size(); ++i) result.vector[(*best_comp)[i]] = best.vec[i];
    result.value = best.value;
    result.iterations = best.iterations;
    result.method = best.method;
    result.residual = residual_inf(g, kind, result.vector, result.value);
    if (result.residual > opts.tol)
        raise(ErrorCode::ConvergenceFailure,
              "eigensolve residual " + std::to_string(result.residual) + " exceeds tolerance " +
                  std::to_string(opts.tol) + "; best estimate " + std::to_string(result.value));
    return result;
}

} // namespace

SpectralResult adjacency_spectral_radius(const Graph& g, const SpectralOptions& opts) {
    return solve(g, MatrixKind::Adjacency, opts);
}

SpectralResult q_spectral_radius(const Graph& g, const SpectralOptions& opts) {
    return solve(g, MatrixKind::SignlessLaplacian, opts);
}

double hong_shu_f(double x, int n, long long m) {
    double radicand = 2.0 * static_cast<double>(m) - static_cast<double>(n) * x + (x + 1.0) * (x + 1.0) / 4.0;
    if (radicand < 0.0)
        raise(ErrorCode::DomainError, "negative radicand in Hong-Shu bound (x=" + std::to_string(x) + ")");
    return (x - 1.0) / 2.0 + std::sqrt(radicand);
}

double cone_lower_bound(double mu, int n) {
    if (n < 2) raise(ErrorCode::DomainError, "cone lower bound needs n >= 2");
    double nd = static_cast<double>(n);
    return (nd - 1.0) / nd * mu + 2.0 * std::sqrt(nd - 1.0) / nd;
}

BoundsReport bounds_report(const Graph& g, std::optional<int> x_size, std::optional<double> mu_for_cone) {
    int n = g.order();
    if (n < 1) raise(ErrorCode::EmptyGraph, "bounds of empty graph");
    long long m = g.edge_count();
    BoundsReport report;

    int delta = g.min_degree();
    report.hong_shu_upper = hong_shu_f(static_cast<double>(delta), n, m);

    if (m > 0) {
        double lo = std::numeric_limits<double>::infinity();
        for (const auto& [u, v] : g.edges())
            lo = std::min(lo, std::sqrt(static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v))));
        report.min_edge_geometric_lower = lo;

        double q_up = 0.0;
        for (int u = 0; u < n; ++u) {
            int du = g.degree(u);
            if (du == 0) continue;
            double s = 0.0;
            for (int v : g.neighbors(u)) s += static_cast<double>(g.degree(v));
            q_up = std::max(q_up, static_cast<double>(du) + s / static_cast<double>(du));
        }
        report.q_degree_upper = q_up;
    }

    if (mu_for_cone && n >= 2) report.cone_lower = cone_lower_bound(*mu_for_cone, n);

    if (x_size) {
        if (*x_size < 0 || *x_size > n) raise(ErrorCode::InvalidArgument, "part mask out of range");
        for (const auto& [u, v] : g.edges()) {
            bool crosses = (u < *x_size) != (v < *x_size);
            if (!crosses)
                raise(ErrorCode::InvalidArgument, "part mask does not describe a bipartition of the input");
        }
        report.sqrt_edges_upper = std::sqrt(static_cast<double>(m));
        int nmax = std::max(*x_size, n - *x_size);
        if (nmax > 0)
            report.q_edge_part_upper = static_cast<double>(m) / static_cast<double>(nmax) + static_cast<double>(nmax);
    }
    return report;
}

} // namespace spectraham
