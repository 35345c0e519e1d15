#include "spectraham.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "spectraham/closure.hpp"
#include "spectraham/conditions.hpp"
#include "spectraham/families.hpp"
#include "spectraham/graph6.hpp"
#include "spectraham/oracle.hpp"
#include "spectraham/serialize.hpp"
#include "spectraham/spectral.hpp"
#include "spectraham/survey.hpp"
#include "spectraham/theorems.hpp"

using namespace spectraham;

struct sp_graph {
    Graph graph;
    std::optional<int> x_size;

    BipartiteGraph bipartite() const {
        if (!x_size) raise(ErrorCode::InvalidArgument, "handle has no bipartition attached");
        return BipartiteGraph::from_embedding(graph, *x_size);
    }
};

namespace {

thread_local std::string t_last_error;

sp_status map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return SP_ERR_INVALID_ARGUMENT;
        case ErrorCode::InvalidEdge: return SP_ERR_INVALID_EDGE;
        case ErrorCode::InvalidVertex: return SP_ERR_INVALID_VERTEX;
        case ErrorCode::EmptyGraph: return SP_ERR_EMPTY_GRAPH;
        case ErrorCode::NotBalanced: return SP_ERR_NOT_BALANCED;
        case ErrorCode::ConvergenceFailure: return SP_ERR_CONVERGENCE;
        case ErrorCode::TooLarge: return SP_ERR_TOO_LARGE;
        case ErrorCode::DomainError: return SP_ERR_DOMAIN;
        case ErrorCode::HypothesisNotMet: return SP_ERR_HYPOTHESIS_NOT_MET;
        case ErrorCode::InvalidFamilyParams: return SP_ERR_INVALID_FAMILY_PARAMS;
        case ErrorCode::UnavailableFamily: return SP_ERR_UNAVAILABLE_FAMILY;
        case ErrorCode::ParseError: return SP_ERR_PARSE;
        case ErrorCode::Internal: return SP_ERR_INTERNAL;
    }
    return SP_ERR_INTERNAL;
}

template <typename Fn>
sp_status guarded(Fn&& fn) {
    try {
        fn();
        return SP_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return map_code(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return SP_ERR_NOMEM;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return SP_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int32_t* alloc_i32(size_t count) {
    auto* out = static_cast<int32_t*>(std::malloc(sizeof(int32_t) * count));
    if (!out) throw std::bad_alloc();
    return out;
}

sp_status require(bool cond, const char* message) {
    if (cond) return SP_OK;
    t_last_error = message;
    return SP_ERR_INVALID_ARGUMENT;
}

SolveMethod to_method(int method) {
    switch (method) {
        case SP_METHOD_DENSE: return SolveMethod::Dense;
        case SP_METHOD_POWER: return SolveMethod::ShiftedPowerIteration;
        default: return SolveMethod::Auto;
    }
}

PropertyQuery to_query(sp_property property, int32_t vertex) {
    switch (property) {
        case SP_PROP_HAMILTONIAN: return PropertyQuery::hamiltonian();
        case SP_PROP_TRACEABLE: return PropertyQuery::traceable();
        case SP_PROP_HAMILTON_CONNECTED: return PropertyQuery::hamilton_connected();
        case SP_PROP_TRACEABLE_FROM_EVERY_VERTEX: return PropertyQuery::traceable_from_every_vertex();
        case SP_PROP_TRACEABLE_FROM: return PropertyQuery::traceable_from(vertex);
    }
    raise(ErrorCode::InvalidArgument, "unknown property");
}

void fill_oracle_info(const OracleAnswer& answer, sp_oracle_info* out, int32_t** witness,
                      size_t* witness_len) {
    out->holds = answer.holds ? 1 : 0;
    out->failing_u = answer.failing_pair ? answer.failing_pair->first : -1;
    out->failing_v = answer.failing_pair ? answer.failing_pair->second : -1;
    out->failing_vertex = answer.failing_vertex ? *answer.failing_vertex : -1;
    if (witness && witness_len) {
        *witness = nullptr;
        *witness_len = 0;
        if (answer.witness) {
            *witness_len = answer.witness->size();
            *witness = alloc_i32(answer.witness->size());
            for (size_t i = 0; i < answer.witness->size(); ++i) (*witness)[i] = (*answer.witness)[i];
        }
    }
}

FamilySpec parse_family(const char* family, int32_t n, int32_t k, int32_t variant) {
    auto id = family_id_from_name(family ? family : "");
    if (!id) raise(ErrorCode::InvalidFamilyParams, std::string("unknown family '") + (family ? family : "") + "'");
    FamilySpec spec;
    spec.id = *id;
    spec.n = n;
    spec.k = k;
    spec.variant = variant;
    return spec;
}

sp_graph* wrap_built(const BuiltGraph& built) {
    auto* out = new sp_graph;
    if (std::holds_alternative<Graph>(built)) {
        out->graph = std::get<Graph>(built);
    } else {
        const auto& b = std::get<BipartiteGraph>(built);
        out->graph = b.embed();
        out->x_size = b.x_size();
    }
    return out;
}

} // namespace

extern "C" {

const char* sp_version(void) { return "spectraham 1.0.0"; }
int sp_api_version(void) { return SPECTRAHAM_API_VERSION; }

const char* sp_status_name(sp_status status) {
    switch (status) {
        case SP_OK: return "OK";
        case SP_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case SP_ERR_INVALID_EDGE: return "InvalidEdge";
        case SP_ERR_INVALID_VERTEX: return "InvalidVertex";
        case SP_ERR_EMPTY_GRAPH: return "EmptyGraph";
        case SP_ERR_NOT_BALANCED: return "NotBalanced";
        case SP_ERR_CONVERGENCE: return "ConvergenceFailure";
        case SP_ERR_TOO_LARGE: return "TooLarge";
        case SP_ERR_DOMAIN: return "DomainError";
        case SP_ERR_HYPOTHESIS_NOT_MET: return "HypothesisNotMet";
        case SP_ERR_INVALID_FAMILY_PARAMS: return "InvalidFamilyParams";
        case SP_ERR_UNAVAILABLE_FAMILY: return "UnavailableFamily";
        case SP_ERR_PARSE: return "ParseError";
        case SP_ERR_NOMEM: return "OutOfMemory";
        case SP_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* sp_last_error(void) { return t_last_error.c_str(); }

void sp_graph_free(sp_graph* g) { delete g; }
void sp_string_free(char* s) { std::free(s); }
void sp_buffer_free(void* p) { std::free(p); }

sp_status sp_graph_from_edges(int32_t n, const int32_t* endpoints, size_t edge_count, sp_graph** out) {
    if (sp_status s = require(out && (edge_count == 0 || endpoints), "null output or endpoints")) return s;
    return guarded([&] {
        std::vector<Edge> edges(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
        Graph g = Graph::from_edges(n, edges);
        auto* handle = new sp_graph;
        handle->graph = std::move(g);
        *out = handle;
    });
}

sp_status sp_bipartite_from_edges(int32_t x_size, int32_t y_size, const int32_t* endpoints,
                                  size_t edge_count, sp_graph** out) {
    if (sp_status s = require(out && (edge_count == 0 || endpoints), "null output or endpoints")) return s;
    return guarded([&] {
        std::vector<Edge> edges(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
        Graph embedded = BipartiteGraph::from_edges(x_size, y_size, edges).embed();
        auto* handle = new sp_graph;
        handle->graph = std::move(embedded);
        handle->x_size = x_size;
        *out = handle;
    });
}

sp_status sp_graph_from_graph6(const char* text, sp_graph** out) {
    if (sp_status s = require(out && text, "null output or text")) return s;
    return guarded([&] {
        Graph g = parse_graph6(text);
        auto* handle = new sp_graph;
        handle->graph = std::move(g);
        *out = handle;
    });
}

sp_status sp_graph_set_x_size(sp_graph* g, int32_t x_size) {
    if (sp_status s = require(g != nullptr, "null handle")) return s;
    return guarded([&] {
        BipartiteGraph::from_embedding(g->graph, x_size); // validates
        g->x_size = x_size;
    });
}

int32_t sp_graph_order(const sp_graph* g) { return g ? g->graph.order() : -1; }
int64_t sp_graph_edge_count(const sp_graph* g) { return g ? g->graph.edge_count() : -1; }
int32_t sp_graph_x_size(const sp_graph* g) { return g && g->x_size ? *g->x_size : -1; }

int sp_graph_has_edge(const sp_graph* g, int32_t u, int32_t v) {
    if (!g) return 0;
    try {
        return g->graph.has_edge(u, v) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

int32_t sp_graph_degree(const sp_graph* g, int32_t v) {
    if (!g) return -1;
    try {
        return g->graph.degree(v);
    } catch (...) {
        return -1;
    }
}

int sp_graph_is_connected(const sp_graph* g) { return g && g->graph.is_connected() ? 1 : 0; }
int sp_graph_is_two_connected(const sp_graph* g) { return g && g->graph.is_two_connected() ? 1 : 0; }

sp_status sp_graph_to_graph6(const sp_graph* g, char** out) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(write_graph6(g->graph)); });
}

sp_status sp_graph_to_json(const sp_graph* g, char** out) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(graph_to_json(g->graph, g->x_size).dump()); });
}

sp_status sp_graph_to_dot(const sp_graph* g, char** out) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(graph_to_dot(g->graph, g->x_size)); });
}

sp_status sp_graph_digest(const sp_graph* g, char** out) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(graph_digest(g->graph, g->x_size)); });
}

sp_status sp_graph_stats_json(const sp_graph* g, char** out) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(stats_to_json(graph_stats(g->graph)).dump()); });
}

sp_status sp_graph_complement(const sp_graph* g, sp_graph** out) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        Graph c = g->graph.complement();
        auto* handle = new sp_graph;
        handle->graph = std::move(c);
        *out = handle;
    });
}

sp_status sp_graph_quasi_complement(const sp_graph* g, sp_graph** out) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        BipartiteGraph qc = g->bipartite().quasi_complement();
        auto* handle = new sp_graph;
        handle->graph = qc.embed();
        handle->x_size = qc.x_size();
        *out = handle;
    });
}

sp_status sp_graph_join(const sp_graph* a, const sp_graph* b, sp_graph** out) {
    if (sp_status s = require(a && b && out, "null argument")) return s;
    return guarded([&] {
        Graph j = join(a->graph, b->graph);
        auto* handle = new sp_graph;
        handle->graph = std::move(j);
        *out = handle;
    });
}

sp_status sp_graph_disjoint_union(const sp_graph* a, const sp_graph* b, sp_graph** out) {
    if (sp_status s = require(a && b && out, "null argument")) return s;
    return guarded([&] {
        Graph u = disjoint_union(a->graph, b->graph);
        auto* handle = new sp_graph;
        handle->graph = std::move(u);
        *out = handle;
    });
}

sp_status sp_graph_add_cone(const sp_graph* g, sp_graph** out) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        Graph c = g->graph.add_cone();
        auto* handle = new sp_graph;
        handle->graph = std::move(c);
        *out = handle;
    });
}

sp_status sp_spectral_radius(const sp_graph* g, sp_matrix_kind kind, double tol, int method,
                             sp_spectral_info* out) {
    return sp_spectral_radius_vector(g, kind, tol, method, out, nullptr);
}

sp_status sp_spectral_radius_vector(const sp_graph* g, sp_matrix_kind kind, double tol, int method,
                                    sp_spectral_info* out, double* vec) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        SpectralOptions opts;
        if (tol > 0) opts.tol = tol;
        opts.method = to_method(method);
        SpectralResult r = kind == SP_MATRIX_ADJACENCY ? adjacency_spectral_radius(g->graph, opts)
                                                       : q_spectral_radius(g->graph, opts);
        out->value = r.value;
        out->residual = r.residual;
        out->iterations = r.iterations;
        out->method = r.method == SolveMethod::Dense ? SP_METHOD_DENSE : SP_METHOD_POWER;
        if (vec)
            for (int i = 0; i < g->graph.order(); ++i) vec[i] = r.vector[i];
    });
}

sp_status sp_bounds_json(const sp_graph* g, int with_spectral, double tol, char** out) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        SpectralOptions opts;
        if (tol > 0) opts.tol = tol;
        Json j;
        if (with_spectral) {
            SpectralResult mu = adjacency_spectral_radius(g->graph, opts);
            SpectralResult q = q_spectral_radius(g->graph, opts);
            j["bounds"] = bounds_to_json(bounds_report(g->graph, g->x_size, mu.value));
            j["mu"] = spectral_to_json(mu, false);
            j["q"] = spectral_to_json(q, false);
        } else {
            j["bounds"] = bounds_to_json(bounds_report(g->graph, g->x_size));
        }
        *out = dup_string(j.dump());
    });
}

sp_status sp_closure(const sp_graph* g, int32_t k, sp_graph** closed, int32_t** added,
                     size_t* added_count) {
    if (sp_status s = require(g && closed && added && added_count, "null argument")) return s;
    return guarded([&] {
        std::vector<Edge> trace;
        Graph closed_graph;
        std::optional<int> closed_x;
        if (g->x_size) {
            auto result = bipartite_closure(g->bipartite());
            closed_graph = result.closed_graph.embed();
            closed_x = result.closed_graph.x_size();
            trace = std::move(result.added_edges);
        } else {
            auto result = k_closure(g->graph, k);
            closed_graph = std::move(result.closed_graph);
            trace = std::move(result.added_edges);
        }
        auto* handle = new sp_graph;
        handle->graph = std::move(closed_graph);
        handle->x_size = closed_x;
        *closed = handle;
        *added_count = trace.size();
        *added = nullptr;
        if (!trace.empty()) {
            *added = alloc_i32(2 * trace.size());
            for (size_t i = 0; i < trace.size(); ++i) {
                (*added)[2 * i] = trace[i].first;
                (*added)[2 * i + 1] = trace[i].second;
            }
        }
    });
}

sp_status sp_oracle_check(const sp_graph* g, sp_property property, int32_t vertex, int32_t cap,
                          sp_oracle_info* out, int32_t** witness, size_t* witness_len) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        OracleOptions opts;
        if (cap > 0) opts.cap = cap;
        OracleAnswer answer = check_property(g->graph, to_query(property, vertex), opts);
        fill_oracle_info(answer, out, witness, witness_len);
    });
}

sp_status sp_ham_path_between(const sp_graph* g, int32_t u, int32_t v, int32_t cap, sp_oracle_info* out,
                              int32_t** witness, size_t* witness_len) {
    if (sp_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        OracleOptions opts;
        if (cap > 0) opts.cap = cap;
        OracleAnswer answer = ham_path_between(g->graph, u, v, opts);
        fill_oracle_info(answer, out, witness, witness_len);
    });
}

sp_status sp_family_build(const char* family, int32_t n, int32_t k, int32_t variant, sp_graph** out) {
    if (sp_status s = require(out != nullptr, "null output")) return s;
    return guarded([&] { *out = wrap_built(build_family(parse_family(family, n, k, variant))); });
}

sp_status sp_family_sample(const char* family, int32_t n, int32_t k, int32_t count, uint64_t seed,
                           int32_t index, sp_graph** out) {
    if (sp_status s = require(out && index >= 0 && index < count, "index out of range")) return s;
    return guarded([&] {
        auto samples = sample_family_members(parse_family(family, n, k, 0), count, seed);
        *out = wrap_built(samples[index]);
    });
}

sp_status sp_family_membership(const sp_graph* g, const char* family, int32_t n, int32_t k, int* member,
                               char** witness_json) {
    if (sp_status s = require(g && member, "null argument")) return s;
    return guarded([&] {
        FamilySpec spec = parse_family(family, n, k, 0);
        MembershipResult result = g->x_size ? family_membership(g->bipartite(), spec)
                                            : family_membership(g->graph, spec);
        *member = result.member ? 1 : 0;
        if (witness_json) *witness_json = dup_string(membership_to_json(result).dump());
    });
}

sp_status sp_condition_check(const sp_graph* g, const char* condition, int32_t k, char** out) {
    if (sp_status s = require(g && condition && out, "null argument")) return s;
    return guarded([&] {
        std::string name = condition;
        ConditionVerdict verdict;
        if (name == "ore_hamilton_connected") {
            verdict = ore_hamilton_connected(g->graph);
        } else if (name == "degree_sequence_hc") {
            verdict = degree_sequence_hc(g->graph);
        } else if (name == "bipartite_edge_conditions") {
            verdict = bipartite_edge_conditions(g->bipartite(), k);
        } else {
            raise(ErrorCode::InvalidArgument, "unknown condition '" + name + "'");
        }
        *out = dup_string(condition_to_json(verdict).dump());
    });
}

sp_status sp_theorem_check(const sp_graph* g, const char* theorem, int32_t k, double tol, double epsilon,
                           int thm211_proof_variant, int validate, int32_t oracle_cap, char** out) {
    if (sp_status s = require(g && theorem && out, "null argument")) return s;
    return guarded([&] {
        auto id = theorem_id_from_name(theorem);
        if (!id) raise(ErrorCode::InvalidArgument, std::string("unknown theorem '") + theorem + "'");
        TheoremOptions opts;
        if (tol > 0) opts.tol = tol;
        if (epsilon > 0) opts.epsilon = epsilon;
        opts.thm211 = thm211_proof_variant ? Thm211Variant::Proof : Thm211Variant::Statement;
        TheoremVerdict verdict;
        if (g->x_size) {
            verdict = check_theorem(*id, g->bipartite(), k, opts);
        } else {
            verdict = check_theorem(*id, g->graph, k, opts);
        }
        Json j = verdict_to_json(verdict);
        if (validate) {
            OracleOptions oopts;
            if (oracle_cap > 0) oopts.cap = oracle_cap;
            j["validation"] = validation_to_json(cross_validate(verdict, g->graph, oopts));
        }
        *out = dup_string(j.dump());
    });
}

sp_status sp_sharpness(const char* lemma, int32_t n, int32_t k, double tol, char** out) {
    if (sp_status s = require(lemma && out, "null argument")) return s;
    return guarded([&] {
        SpectralOptions opts;
        if (tol > 0) opts.tol = tol;
        *out = dup_string(sharpness_to_json(verify_sharpness(lemma, n, k, opts)).dump());
    });
}

sp_status sp_remark_3_11(int32_t n, int32_t k, double tol, char** out) {
    if (sp_status s = require(out != nullptr, "null output")) return s;
    return guarded([&] {
        SpectralOptions opts;
        if (tol > 0) opts.tol = tol;
        *out = dup_string(remark_to_json(check_remark_3_11(n, k, opts)).dump());
    });
}

sp_status sp_survey(const char* params_json, char** out) {
    if (sp_status s = require(params_json && out, "null argument")) return s;
    return guarded([&] {
        Json j = Json::parse(params_json);
        SurveyParams params;
        for (const auto& [key, value] : j.items()) {
            if (key == "regime") {
                auto regime = survey_regime_from_name(value.get<std::string>());
                if (!regime) raise(ErrorCode::InvalidArgument, "unknown regime");
                params.regime = *regime;
            } else if (key == "n") {
                params.n = value.get<int>();
            } else if (key == "k") {
                params.k = value.get<int>();
            } else if (key == "samples") {
                params.samples = value.get<int>();
            } else if (key == "seed") {
                params.seed = value.get<std::uint64_t>();
            } else if (key == "tol") {
                params.tol = value.get<double>();
            } else if (key == "epsilon") {
                params.epsilon = value.get<double>();
            } else if (key == "oracle_cap") {
                params.oracle_cap = value.get<int>();
            } else if (key == "threads") {
                params.threads = value.get<int>();
            } else if (key == "thm211_variant") {
                params.thm211 = value.get<std::string>() == "proof" ? Thm211Variant::Proof
                                                                    : Thm211Variant::Statement;
            } else {
                raise(ErrorCode::InvalidArgument, "unknown survey parameter '" + key + "'");
            }
        }
        *out = dup_string(survey_to_json(run_survey(params)).dump());
    });
}

} // extern "C"
