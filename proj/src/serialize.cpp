#include "spectraham/serialize.hpp"

#include "spectraham/graph6.hpp"
#include "spectraham/util.hpp"

namespace spectraham {

std::string canonical_graph_string(const Graph& g, std::optional<int> x_size) {
    std::string s = "g6:" + write_graph6(g);
    if (x_size) s += ";x=" + std::to_string(*x_size);
    return s;
}

std::string graph_digest(const Graph& g, std::optional<int> x_size) {
    return fnv1a64_digest(canonical_graph_string(g, x_size));
}

Json graph_to_json(const Graph& g, std::optional<int> x_size) {
    Json j;
    j["n"] = g.order();
    j["m"] = g.edge_count();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    j["graph6"] = write_graph6(g);
    if (x_size) j["x_size"] = *x_size;
    return j;
}

Json stats_to_json(const GraphStats& s) {
    Json j;
    j["degree_sequence"] = s.degree_sequence;
    j["min_degree"] = s.min_degree;
    j["edge_count"] = s.edge_count;
    j["connected"] = s.connected;
    j["two_connected"] = s.two_connected;
    return j;
}

std::string graph_to_dot(const Graph& g, std::optional<int> x_size) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out += "  v" + std::to_string(v);
        if (x_size) out += (v < *x_size) ? " [part=X]" : " [part=Y]";
        out += ";\n";
    }
    for (const auto& [u, v] : g.edges())
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

Json spectral_to_json(const SpectralResult& r, bool include_vector) {
    Json j;
    j["kind"] = r.kind == MatrixKind::Adjacency ? "adjacency" : "signless_laplacian";
    j["value"] = r.value;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["method"] = r.method == SolveMethod::Dense ? "dense" : "shifted_power_iteration";
    if (include_vector) j["vector"] = r.vector;
    return j;
}

Json bounds_to_json(const BoundsReport& r) {
    Json j;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) j[key] = *v;
    };
    put("hong_shu_upper", r.hong_shu_upper);
    put("min_edge_geometric_lower", r.min_edge_geometric_lower);
    put("cone_lower", r.cone_lower);
    put("sqrt_edges_upper", r.sqrt_edges_upper);
    put("q_degree_upper", r.q_degree_upper);
    put("q_edge_part_upper", r.q_edge_part_upper);
    return j;
}

namespace {

Json edges_to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& [a, b] : edges) out.push_back(Json::array({a, b}));
    return out;
}

} // namespace

Json closure_to_json(const ClosureResult<Graph>& r) {
    Json j;
    j["kind"] = "k_closure";
    j["parameter"] = r.parameter;
    j["added_edges"] = edges_to_json(r.added_edges);
    j["closed_graph6"] = write_graph6(r.closed_graph);
    return j;
}

Json closure_to_json(const ClosureResult<BipartiteGraph>& r) {
    Json j;
    j["kind"] = "bipartite_closure";
    j["parameter"] = r.parameter;
    j["added_edges"] = edges_to_json(r.added_edges); // (x, y) index pairs
    j["closed_graph6"] = write_graph6(r.closed_graph.embed());
    j["x_size"] = r.closed_graph.x_size();
    return j;
}

Json oracle_to_json(const OracleAnswer& a) {
    Json j;
    j["holds"] = a.holds;
    if (a.witness) j["witness"] = *a.witness;
    if (a.failing_pair) j["failing_pair"] = Json::array({a.failing_pair->first, a.failing_pair->second});
    if (a.failing_vertex) j["failing_vertex"] = *a.failing_vertex;
    return j;
}

Json condition_to_json(const ConditionVerdict& v) {
    Json j;
    j["condition"] = v.condition_id;
    j["satisfied"] = v.satisfied;
    if (v.violating_pair) j["violating_pair"] = Json::array({v.violating_pair->first, v.violating_pair->second});
    if (v.bad_k) j["bad_k"] = *v.bad_k;
    if (v.branch) j["branch"] = *v.branch;
    if (v.edge_count) j["edge_count"] = *v.edge_count;
    if (v.edge_threshold) j["edge_threshold"] = *v.edge_threshold;
    if (v.warning) j["warning"] = *v.warning;
    return j;
}

Json membership_to_json(const MembershipResult& m) {
    Json j;
    j["member"] = m.member;
    if (m.witness) {
        Json w;
        if (m.witness->r) w["r"] = *m.witness->r;
        if (!m.witness->subset.empty()) w["subset"] = m.witness->subset;
        if (!m.witness->subset2.empty()) w["subset2"] = m.witness->subset2;
        if (m.witness->variant) w["variant"] = *m.witness->variant;
        j["witness"] = std::move(w);
    }
    return j;
}

Json verdict_to_json(const TheoremVerdict& v) {
    Json j;
    j["theorem"] = theorem_id_name(v.theorem);
    switch (v.hypothesis) {
        case HypothesisStatus::Met: j["hypothesis"] = "met"; break;
        case HypothesisStatus::NotMet: j["hypothesis"] = "not_met"; break;
        case HypothesisStatus::Boundary: j["hypothesis"] = "boundary"; break;
    }
    if (!v.hypothesis_detail.empty()) j["hypothesis_detail"] = v.hypothesis_detail;
    Json e;
    e["n"] = v.evidence.n;
    e["k"] = v.evidence.k;
    e["min_degree"] = v.evidence.min_degree;
    if (v.evidence.spectral_value) {
        e["spectral_kind"] = v.evidence.spectral_kind;
        e["spectral_target"] = v.evidence.spectral_target;
        e["comparison"] = v.evidence.comparison;
        e["spectral_value"] = *v.evidence.spectral_value;
        e["threshold"] = *v.evidence.threshold;
    }
    j["evidence"] = std::move(e);
    if (v.conclusion) {
        Json c;
        if (*v.conclusion == ConclusionType::Certified) {
            c["type"] = "certified";
            c["property"] = property_name(*v.property);
        } else {
            c["type"] = "exception";
            c["family"] = family_id_name(v.exception_family->id);
            c["family_n"] = v.exception_family->n;
            c["family_k"] = v.exception_family->k;
            if (v.exception_family->id == FamilyId::Gamma2MinusV)
                c["family_variant"] = v.exception_family->variant;
            if (v.exception_witness) {
                MembershipResult m;
                m.member = true;
                m.witness = v.exception_witness;
                c["witness"] = membership_to_json(m)["witness"];
            }
        }
        j["conclusion"] = std::move(c);
    }
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

Json sharpness_to_json(const SharpnessReport& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["n"] = r.n;
    j["k"] = r.k;
    j["threshold"] = r.threshold;
    j["extremal_mu"] = r.extremal_mu;
    j["admissible_deletions"] = r.admissible_deletions;
    j["max_subgraph_mu"] = r.max_subgraph_mu;
    j["worst_edge"] = Json::array({r.worst_edge.first, r.worst_edge.second});
    j["all_strict"] = r.all_strict;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json row;
        row["removed"] = Json::array({e.removed.first, e.removed.second});
        row["mu"] = e.mu;
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json remark_to_json(const RemarkReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["x"] = 2 * r.n - r.k - 1;
    j["f_at_point_factored"] = r.f_at_point_factored;
    j["f_at_point_expanded"] = r.f_at_point_expanded;
    j["codings_agree"] = r.codings_agree;
    j["f_negative"] = r.f_negative;
    j["theorem_threshold"] = r.theorem_threshold;
    if (r.q_deleted) {
        j["q_deleted"] = *r.q_deleted;
        j["q_threshold"] = *r.q_threshold;
        j["q_exceeds"] = *r.q_exceeds;
    }
    return j;
}

Json validation_to_json(const ValidationReport& r) {
    Json j;
    j["checked"] = r.checked;
    j["agreed"] = r.agreed;
    if (r.oracle_holds) j["oracle_holds"] = *r.oracle_holds;
    j["detail"] = r.detail;
    return j;
}

Json survey_to_json(const SurveyResult& r) {
    Json j;
    j["regime"] = survey_regime_name(r.params.regime);
    j["n"] = r.params.n;
    j["k"] = r.params.k;
    j["samples"] = r.params.samples;
    j["seed"] = r.params.seed;
    j["threads_used"] = r.threads_used;
    Json gen;
    gen["model"] = "gnp";
    gen["p_range"] = Json::array({0.15, 0.85});
    gen["min_degree_repair"] = "random edges added at deficient vertices";
    gen["repaired_samples"] = r.repaired_samples;
    j["generator"] = std::move(gen);
    j["total_edges"] = r.total_edges;
    Json table;
    for (const auto& [name, counts] : r.per_theorem) {
        Json row;
        row["considered"] = counts.considered;
        row["hypothesis_met"] = counts.hypothesis_met;
        row["hypothesis_not_met"] = counts.hypothesis_not_met;
        row["boundary"] = counts.boundary;
        row["certified"] = counts.certified;
        row["exception"] = counts.exception;
        row["certified_oracle_checked"] = counts.certified_oracle_checked;
        row["certified_oracle_confirmed"] = counts.certified_oracle_confirmed;
        row["exception_oracle_checked"] = counts.exception_oracle_checked;
        row["exception_oracle_confirmed"] = counts.exception_oracle_confirmed;
        table[name] = std::move(row);
    }
    j["per_theorem"] = std::move(table);
    if (!r.mismatches.empty()) j["mismatches"] = r.mismatches;
    return j;
}

} // namespace spectraham
