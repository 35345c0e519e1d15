#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spectraham/errors.hpp"

namespace spectraham {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1, adjacency stored as
/// per-vertex bitsets. All algebra operations return new values.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);
    static Graph complete(int n);
    static Graph empty(int n);

    int order() const noexcept { return n_; }
    long long edge_count() const noexcept { return m_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    int min_degree() const; // n >= 1 required

    /// Neighbor bitset row of v (words_per_row() 64-bit words).
    std::span<const std::uint64_t> row(int v) const;
    int words_per_row() const noexcept { return words_; }
    std::vector<int> neighbors(int v) const;

    Graph complement() const;
    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph induced(std::span<const int> vertices) const;
    Graph remove_vertex(int v) const;

    /// G ∨ K1 with the new dominating vertex at index 0.
    Graph add_cone() const;

    bool is_connected() const;
    bool is_two_connected() const; // false for n <= 2
    std::vector<int> component_labels() const;
    std::vector<std::vector<int>> components() const;

    /// Two-coloring if the graph is bipartite (color of vertex i in {0,1}),
    /// nullopt otherwise. Isolated vertices get color 0.
    std::optional<std::vector<int>> bipartition() const;

    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const;

private:
    friend Graph join(const Graph&, const Graph&);
    friend Graph disjoint_union(const Graph&, const Graph&);
    friend class GraphBuilder;
    friend class BipartiteGraph;

    explicit Graph(int n);
    void set_edge(int u, int v); // construction only
    void unset_edge(int u, int v);
    void recount();

    bool test_bit(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Mutable helper for incremental construction; freeze() validates and
/// produces the immutable value.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    int order() const { return g_.order(); }
    Graph freeze() &&;

private:
    Graph g_;
};

/// Simple bipartite graph with fixed ordered parts (X, Y); part identity is
/// significant, so e.g. the edgeless graphs on parts (2,3) and (3,2) differ.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// Edges given as (x index, y index) pairs.
    static BipartiteGraph from_edges(int x_size, int y_size, std::span<const Edge> edges);
    static BipartiteGraph from_edges(int x_size, int y_size, std::initializer_list<Edge> edges);
    static BipartiteGraph complete(int x_size, int y_size);
    static BipartiteGraph empty(int x_size, int y_size);

    int x_size() const noexcept { return nx_; }
    int y_size() const noexcept { return ny_; }
    int order() const noexcept { return nx_ + ny_; }
    long long edge_count() const noexcept { return m_; }

    bool balanced() const noexcept { return nx_ == ny_; }
    /// Follows the fixed convention |X| = |Y| - 1.
    bool nearly_balanced() const noexcept { return nx_ == ny_ - 1; }

    bool has_edge(int x, int y) const;
    int degree_x(int x) const;
    int degree_y(int y) const;
    int min_degree() const; // over all vertices, order >= 1 required
    std::vector<int> x_neighbors_of_y(int y) const;
    std::vector<int> y_neighbors_of_x(int x) const;

    BipartiteGraph quasi_complement() const;
    BipartiteGraph with_edge(int x, int y) const;
    BipartiteGraph without_edge(int x, int y) const;
    BipartiteGraph remove_x(int x) const;
    BipartiteGraph remove_y(int y) const;

    /// New X vertex adjacent to every vertex of Y (appended at index x_size()).
    BipartiteGraph cone_over_y() const;
    /// New Y vertex adjacent to every vertex of X.
    BipartiteGraph cone_over_x() const;

    /// Embedding as a plain graph: X vertices come first (0..|X|-1), then Y.
    Graph embed() const;
    /// Inverse of embed() given the X part size.
    static BipartiteGraph from_embedding(const Graph& g, int x_size);

    std::vector<Edge> edges() const;

    bool operator==(const BipartiteGraph& other) const;

private:
    BipartiteGraph(int nx, int ny);
    void set_edge(int x, int y);

    bool test_bit(int x, int y) const {
        return (bits_[static_cast<std::size_t>(x) * words_ + (y >> 6)] >> (y & 63)) & 1u;
    }

    int nx_ = 0;
    int ny_ = 0;
    int words_ = 0; // words per X row, indexed by Y
    long long m_ = 0;
    std::vector<std::uint64_t> bits_;

    friend BipartiteGraph bipartite_sqcup(const BipartiteGraph&, const BipartiteGraph&);
};

/// G1 ⊔ G2: disjoint union plus all edges X1×Y2 and Y1×X2.
BipartiteGraph bipartite_sqcup(const BipartiteGraph& a, const BipartiteGraph& b);

struct GraphStats {
    std::vector<int> degree_sequence; // sorted ascending
    int min_degree = 0;
    long long edge_count = 0;
    bool connected = false;
    bool two_connected = false;
};

GraphStats graph_stats(const Graph& g); // throws EmptyGraph for n = 0

} // namespace spectraham
