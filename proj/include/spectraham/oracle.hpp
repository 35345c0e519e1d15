#pragma once

#include <optional>
#include <vector>

#include "spectraham/graph.hpp"

namespace spectraham {

enum class HamProperty {
    Hamiltonian,
    Traceable,
    HamiltonConnected,
    TraceableFromEveryVertex,
    TraceableFrom, // requires a vertex
};

struct PropertyQuery {
    HamProperty tag = HamProperty::Traceable;
    int vertex = -1; // TraceableFrom only

    static PropertyQuery hamiltonian() { return {HamProperty::Hamiltonian, -1}; }
    static PropertyQuery traceable() { return {HamProperty::Traceable, -1}; }
    static PropertyQuery hamilton_connected() { return {HamProperty::HamiltonConnected, -1}; }
    static PropertyQuery traceable_from_every_vertex() { return {HamProperty::TraceableFromEveryVertex, -1}; }
    static PropertyQuery traceable_from(int v) { return {HamProperty::TraceableFrom, v}; }
};

struct OracleAnswer {
    bool holds = false;
    /// Hamiltonian path (or cycle written as a path whose endpoints are
    /// adjacent) when holds and a witness exists.
    std::optional<std::vector<int>> witness;
    /// First endpoint pair with no spanning path (HamiltonConnected failures).
    std::optional<Edge> failing_pair;
    /// First start vertex with no spanning path (TraceableFromEveryVertex failures).
    std::optional<int> failing_vertex;
};

struct OracleOptions {
    int cap = 24; // TooLarge above this order; never a wrong answer
};

/// Exact: does g contain a Hamiltonian u-v path?
OracleAnswer ham_path_between(const Graph& g, int u, int v, const OracleOptions& opts = {});

/// Exact decision for the named property.
OracleAnswer check_property(const Graph& g, PropertyQuery query, const OracleOptions& opts = {});

/// True when the sequence visits every vertex exactly once with consecutive
/// vertices adjacent (and endpoints adjacent too if cycle is requested).
bool validate_witness(const Graph& g, const std::vector<int>& sequence, bool cycle);

} // namespace spectraham
