#include "spectraham/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace spectraham {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidEdge: return "InvalidEdge";
        case ErrorCode::InvalidVertex: return "InvalidVertex";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::NotBalanced: return "NotBalanced";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
        case ErrorCode::UnavailableFamily: return "UnavailableFamily";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

int words_for(int n) { return n <= 0 ? 1 : (n + 63) / 64; }

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        raise(ErrorCode::InvalidVertex,
              "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
}

} // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)), m_(0), bits_(static_cast<std::size_t>(std::max(n, 1)) * words_, 0) {
    if (n < 0) raise(ErrorCode::InvalidArgument, "negative vertex count");
}

void Graph::set_edge(int u, int v) {
    if (!test_bit(u, v)) {
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= (std::uint64_t{1} << (v & 63));
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= (std::uint64_t{1} << (u & 63));
        ++m_;
    }
}

void Graph::unset_edge(int u, int v) {
    if (test_bit(u, v)) {
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
        --m_;
    }
}

void Graph::recount() {
    long long total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    m_ = total / 2;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v)
            raise(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
        g.set_edge(u, v);
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
    return g;
}

Graph Graph::empty(int n) { return Graph(n); }

bool Graph::has_edge(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) return false;
    return test_bit(u, v);
}

int Graph::degree(int v) const {
    check_vertex(v, n_);
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(n_);
    for (int v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

int Graph::min_degree() const {
    if (n_ == 0) raise(ErrorCode::EmptyGraph, "min_degree of empty graph");
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::span<const std::uint64_t> Graph::row(int v) const {
    check_vertex(v, n_);
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    auto r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!test_bit(u, v)) g.set_edge(u, v);
    return g;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v) raise(ErrorCode::InvalidEdge, "self-loop");
    Graph g = *this;
    g.set_edge(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u, n_);
    check_vertex(v, n_);
    Graph g = *this;
    g.unset_edge(u, v);
    return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
    Graph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i], n_);
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (test_bit(vertices[i], vertices[j])) g.set_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

Graph Graph::remove_vertex(int v) const {
    check_vertex(v, n_);
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced(keep);
}

Graph Graph::add_cone() const { return join(Graph::complete(1), *this); }

std::vector<int> Graph::component_labels() const {
    std::vector<int> label(n_, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (label[s] != -1) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : neighbors(v)) {
                if (label[u] == -1) {
                    label[u] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<std::vector<int>> Graph::components() const {
    auto label = component_labels();
    int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> out(count);
    for (int v = 0; v < n_; ++v) out[label[v]].push_back(v);
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto label = component_labels();
    return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

bool Graph::is_two_connected() const {
    if (n_ <= 2) return false;
    if (!is_connected()) return false;
    // articulation-point search, iterative DFS
    std::vector<int> disc(n_, -1), low(n_, 0), parent(n_, -1), child_count(n_, 0);
    std::vector<std::pair<int, int>> stack; // (vertex, neighbor cursor)
    std::vector<std::vector<int>> adj(n_);
    for (int v = 0; v < n_; ++v) adj[v] = neighbors(v);
    int timer = 0;
    disc[0] = low[0] = timer++;
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [v, cursor] = stack.back();
        if (cursor < static_cast<int>(adj[v].size())) {
            int u = adj[v][cursor++];
            if (disc[u] == -1) {
                parent[u] = v;
                ++child_count[v];
                disc[u] = low[u] = timer++;
                stack.emplace_back(u, 0);
            } else if (u != parent[v]) {
                low[v] = std::min(low[v], disc[u]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                int p = stack.back().first;
                low[p] = std::min(low[p], low[v]);
                if (parent[p] != -1 && low[v] >= disc[p]) return false; // p is an articulation point
            }
        }
    }
    if (child_count[0] > 1) return false; // root articulation
    return true;
}

std::optional<std::vector<int>> Graph::bipartition() const {
    std::vector<int> color(n_, -1);
    std::vector<int> queue;
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (test_bit(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g(a.n_ + b.n_);
    for (const auto& [u, v] : a.edges()) g.set_edge(u, v);
    for (const auto& [u, v] : b.edges()) g.set_edge(a.n_ + u, a.n_ + v);
    for (int u = 0; u < a.n_; ++u)
        for (int v = 0; v < b.n_; ++v) g.set_edge(u, a.n_ + v);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n_ + b.n_);
    for (const auto& [u, v] : a.edges()) g.set_edge(u, v);
    for (const auto& [u, v] : b.edges()) g.set_edge(a.n_ + u, a.n_ + v);
    return g;
}

GraphBuilder::GraphBuilder(int n) : g_(Graph::empty(n)) {}

void GraphBuilder::add_edge(int u, int v) {
    check_vertex(u, g_.order());
    check_vertex(v, g_.order());
    if (u == v) raise(ErrorCode::InvalidEdge, "self-loop");
    g_.set_edge(u, v);
}

void GraphBuilder::remove_edge(int u, int v) { g_.unset_edge(u, v); }

Graph GraphBuilder::freeze() && { return std::move(g_); }

// ---- BipartiteGraph ----

BipartiteGraph::BipartiteGraph(int nx, int ny)
    : nx_(nx), ny_(ny), words_(words_for(ny)), m_(0),
      bits_(static_cast<std::size_t>(std::max(nx, 1)) * words_, 0) {
    if (nx < 0 || ny < 0) raise(ErrorCode::InvalidArgument, "negative part size");
}

void BipartiteGraph::set_edge(int x, int y) {
    if (!test_bit(x, y)) {
        bits_[static_cast<std::size_t>(x) * words_ + (y >> 6)] |= (std::uint64_t{1} << (y & 63));
        ++m_;
    }
}

BipartiteGraph BipartiteGraph::from_edges(int x_size, int y_size, std::span<const Edge> edges) {
    BipartiteGraph b(x_size, y_size);
    for (const auto& [x, y] : edges) {
        check_vertex(x, x_size);
        check_vertex(y, y_size);
        b.set_edge(x, y);
    }
    return b;
}

BipartiteGraph BipartiteGraph::from_edges(int x_size, int y_size, std::initializer_list<Edge> edges) {
    return from_edges(x_size, y_size, std::span<const Edge>(edges.begin(), edges.size()));
}

BipartiteGraph BipartiteGraph::complete(int x_size, int y_size) {
    BipartiteGraph b(x_size, y_size);
    for (int x = 0; x < x_size; ++x)
        for (int y = 0; y < y_size; ++y) b.set_edge(x, y);
    return b;
}

BipartiteGraph BipartiteGraph::empty(int x_size, int y_size) { return BipartiteGraph(x_size, y_size); }

bool BipartiteGraph::has_edge(int x, int y) const {
    check_vertex(x, nx_);
    check_vertex(y, ny_);
    return test_bit(x, y);
}

int BipartiteGraph::degree_x(int x) const {
    check_vertex(x, nx_);
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(bits_[static_cast<std::size_t>(x) * words_ + w]);
    return d;
}

int BipartiteGraph::degree_y(int y) const {
    check_vertex(y, ny_);
    int d = 0;
    for (int x = 0; x < nx_; ++x)
        if (test_bit(x, y)) ++d;
    return d;
}

int BipartiteGraph::min_degree() const {
    if (order() == 0) raise(ErrorCode::EmptyGraph, "min_degree of empty graph");
    int best = order();
    for (int x = 0; x < nx_; ++x) best = std::min(best, degree_x(x));
    for (int y = 0; y < ny_; ++y) best = std::min(best, degree_y(y));
    return best;
}

std::vector<int> BipartiteGraph::y_neighbors_of_x(int x) const {
    check_vertex(x, nx_);
    std::vector<int> out;
    for (int y = 0; y < ny_; ++y)
        if (test_bit(x, y)) out.push_back(y);
    return out;
}

std::vector<int> BipartiteGraph::x_neighbors_of_y(int y) const {
    check_vertex(y, ny_);
    std::vector<int> out;
    for (int x = 0; x < nx_; ++x)
        if (test_bit(x, y)) out.push_back(x);
    return out;
}

BipartiteGraph BipartiteGraph::quasi_complement() const {
    BipartiteGraph b(nx_, ny_);
    for (int x = 0; x < nx_; ++x)
        for (int y = 0; y < ny_; ++y)
            if (!test_bit(x, y)) b.set_edge(x, y);
    return b;
}

BipartiteGraph BipartiteGraph::with_edge(int x, int y) const {
    check_vertex(x, nx_);
    check_vertex(y, ny_);
    BipartiteGraph b = *this;
    b.set_edge(x, y);
    return b;
}

BipartiteGraph BipartiteGraph::without_edge(int x, int y) const {
    check_vertex(x, nx_);
    check_vertex(y, ny_);
    BipartiteGraph b = *this;
    if (b.test_bit(x, y)) {
        b.bits_[static_cast<std::size_t>(x) * b.words_ + (y >> 6)] &= ~(std::uint64_t{1} << (y & 63));
        --b.m_;
    }
    return b;
}

BipartiteGraph BipartiteGraph::remove_x(int x) const {
    check_vertex(x, nx_);
    BipartiteGraph b(nx_ - 1, ny_);
    for (int i = 0, j = 0; i < nx_; ++i) {
        if (i == x) continue;
        for (int y = 0; y < ny_; ++y)
            if (test_bit(i, y)) b.set_edge(j, y);
        ++j;
    }
    return b;
}

BipartiteGraph BipartiteGraph::remove_y(int y) const {
    check_vertex(y, ny_);
    BipartiteGraph b(nx_, ny_ - 1);
    for (int x = 0; x < nx_; ++x) {
        for (int j = 0, t = 0; j < ny_; ++j) {
            if (j == y) continue;
            if (test_bit(x, j)) b.set_edge(x, t);
            ++t;
        }
    }
    return b;
}

BipartiteGraph BipartiteGraph::cone_over_y() const {
    BipartiteGraph b(nx_ + 1, ny_);
    for (int x = 0; x < nx_; ++x)
        for (int y = 0; y < ny_; ++y)
            if (test_bit(x, y)) b.set_edge(x, y);
    for (int y = 0; y < ny_; ++y) b.set_edge(nx_, y);
    return b;
}

BipartiteGraph BipartiteGraph::cone_over_x() const {
    BipartiteGraph b(nx_, ny_ + 1);
    for (int x = 0; x < nx_; ++x) {
        for (int y = 0; y < ny_; ++y)
            if (test_bit(x, y)) b.set_edge(x, y);
        b.set_edge(x, ny_);
    }
    return b;
}

Graph BipartiteGraph::embed() const {
    Graph g(nx_ + ny_);
    for (int x = 0; x < nx_; ++x)
        for (int y = 0; y < ny_; ++y)
            if (test_bit(x, y)) g.set_edge(x, nx_ + y);
    return g;
}

BipartiteGraph BipartiteGraph::from_embedding(const Graph& g, int x_size) {
    if (x_size < 0 || x_size > g.order())
        raise(ErrorCode::InvalidArgument, "part size out of range");
    int y_size = g.order() - x_size;
    BipartiteGraph b(x_size, y_size);
    for (const auto& [u, v] : g.edges()) {
        int lo = std::min(u, v), hi = std::max(u, v);
        if (lo >= x_size || hi < x_size)
            raise(ErrorCode::InvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not cross the bipartition");
        b.set_edge(lo, hi - x_size);
    }
    return b;
}

std::vector<Edge> BipartiteGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int x = 0; x < nx_; ++x)
        for (int y = 0; y < ny_; ++y)
            if (test_bit(x, y)) out.emplace_back(x, y);
    return out;
}

bool BipartiteGraph::operator==(const BipartiteGraph& other) const {
    return nx_ == other.nx_ && ny_ == other.ny_ && bits_ == other.bits_;
}

BipartiteGraph bipartite_sqcup(const BipartiteGraph& a, const BipartiteGraph& b) {
    BipartiteGraph out(a.nx_ + b.nx_, a.ny_ + b.ny_);
    for (const auto& [x, y] : a.edges()) out.set_edge(x, y);
    for (const auto& [x, y] : b.edges()) out.set_edge(a.nx_ + x, a.ny_ + y);
    for (int x = 0; x < a.nx_; ++x) // X1 × Y2
        for (int y = 0; y < b.ny_; ++y) out.set_edge(x, a.ny_ + y);
    for (int x = 0; x < b.nx_; ++x) // X2 × Y1
        for (int y = 0; y < a.ny_; ++y) out.set_edge(a.nx_ + x, y);
    return out;
}

GraphStats graph_stats(const Graph& g) {
    if (g.order() == 0) raise(ErrorCode::EmptyGraph, "stats of empty graph");
    GraphStats s;
    s.degree_sequence = g.degrees();
    std::sort(s.degree_sequence.begin(), s.degree_sequence.end());
    s.min_degree = s.degree_sequence.front();
    s.edge_count = g.edge_count();
    s.connected = g.is_connected();
    s.two_connected = g.is_two_connected();
    return s;
}

} // namespace spectraham
