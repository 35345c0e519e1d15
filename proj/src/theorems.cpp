#include "spectraham/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace spectraham {

namespace {

struct TheoremName {
    TheoremId id;
    const char* name;
};

constexpr TheoremName kTheoremNames[] = {
    {TheoremId::T2_10, "T2_10"}, {TheoremId::T2_11, "T2_11"}, {TheoremId::T2_12, "T2_12"},
    {TheoremId::T2_13, "T2_13"}, {TheoremId::T3_9, "T3_9"},   {TheoremId::T3_10, "T3_10"},
    {TheoremId::T3_11, "T3_11"},
};

enum class Zone { Met, NotMet, Boundary };

Zone compare_with_slack(double value, double threshold, const std::string& cmp, double eps) {
    if (std::abs(value - threshold) < eps) return Zone::Boundary;
    bool met = (cmp == "<=") ? value < threshold : value > threshold;
    return met ? Zone::Met : Zone::NotMet;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct ExceptionProbe {
    FamilySpec spec;
    MembershipResult result;
};

} // namespace

const char* theorem_id_name(TheoremId id) {
    for (const auto& e : kTheoremNames)
        if (e.id == id) return e.name;
    return "Unknown";
}

std::optional<TheoremId> theorem_id_from_name(const std::string& name) {
    for (const auto& e : kTheoremNames)
        if (name == e.name) return e.id;
    return std::nullopt;
}

CertifiedProperty theorem_property(TheoremId id) {
    switch (id) {
        case TheoremId::T2_10:
        case TheoremId::T2_12:
            return CertifiedProperty::HamiltonConnected;
        case TheoremId::T2_11:
        case TheoremId::T2_13:
            return CertifiedProperty::TraceableFromEveryVertex;
        default:
            return CertifiedProperty::Traceable;
    }
}

const char* property_name(CertifiedProperty p) {
    switch (p) {
        case CertifiedProperty::HamiltonConnected: return "hamilton_connected";
        case CertifiedProperty::TraceableFromEveryVertex: return "traceable_from_every_vertex";
        case CertifiedProperty::Traceable: return "traceable";
    }
    return "unknown";
}

namespace {

// Shared tail: spectral zone is already computed, probes are the theorem's
// exceptional families in match priority order.
void conclude(TheoremVerdict& v, Zone zone, const std::vector<ExceptionProbe>& probes,
              const std::vector<ExceptionProbe>& statement_probes) {
    switch (zone) {
        case Zone::Met: v.hypothesis = HypothesisStatus::Met; break;
        case Zone::NotMet: v.hypothesis = HypothesisStatus::NotMet; break;
        case Zone::Boundary: v.hypothesis = HypothesisStatus::Boundary; break;
    }
    if (zone == Zone::NotMet)
        v.hypothesis_detail = "spectral hypothesis fails: " + fmt(*v.evidence.spectral_value) + " " +
                              v.evidence.comparison + " " + fmt(*v.evidence.threshold) + " is false";
    if (zone == Zone::Boundary)
        v.hypothesis_detail = "spectral value " + fmt(*v.evidence.spectral_value) +
                              " within epsilon of threshold " + fmt(*v.evidence.threshold);

    for (const auto& probe : probes) {
        if (probe.result.member) {
            v.conclusion = ConclusionType::Exception;
            v.exception_family = probe.spec;
            v.exception_witness = probe.result.witness;
            return;
        }
    }
    for (const auto& probe : statement_probes) {
        if (probe.result.member)
            v.notes.push_back(std::string("input matches the statement-literal exception ") +
                              family_id_name(probe.spec.id) +
                              "; the checker follows the proof construction, which this is not");
    }
    if (zone == Zone::Met) {
        v.conclusion = ConclusionType::Certified;
        v.property = theorem_property(v.theorem);
    }
    // Boundary without a structural match stays open: both values are in the
    // evidence, never a silent guess.
}

TheoremVerdict check_simple(TheoremId id, const Graph& g, int k, const TheoremOptions& opts) {
    TheoremVerdict v;
    v.theorem = id;
    int n = g.order();
    v.evidence.n = n;
    v.evidence.k = k;
    v.evidence.min_degree = n > 0 ? g.min_degree() : 0;
    v.evidence.spectral_kind = "mu";

    auto not_met = [&](const std::string& reason) {
        v.hypothesis = HypothesisStatus::NotMet;
        v.hypothesis_detail = reason;
        return v;
    };

    int k_floor = (id == TheoremId::T2_11) ? 1 : 2;
    if (k < k_floor) return not_met("needs k >= " + std::to_string(k_floor));
    long long n_floor = 0;
    switch (id) {
        case TheoremId::T2_10: n_floor = 2LL * k * k + 1; break;
        case TheoremId::T2_11: n_floor = 2LL * (k + 1) * (k + 1); break;
        case TheoremId::T2_12: n_floor = 2LL * k; break;
        case TheoremId::T2_13: n_floor = 2LL * k + 1; break;
        default: raise(ErrorCode::Internal, "not a simple-graph theorem");
    }
    if (n < n_floor) return not_met("needs n >= " + std::to_string(n_floor));
    if (v.evidence.min_degree < k) return not_met("minimum degree " + std::to_string(v.evidence.min_degree) +
                                                  " below k");

    double value = 0.0, threshold = 0.0;
    std::vector<ExceptionProbe> probes, statement_probes;
    MembershipOptions mopts = opts.membership;
    SpectralOptions sopts = opts.spectral;
    sopts.tol = opts.tol;

    switch (id) {
        case TheoremId::T2_10: {
            v.evidence.spectral_target = "graph";
            v.evidence.comparison = ">=";
            value = adjacency_spectral_radius(g, sopts).value;
            threshold = static_cast<double>(n - k);
            FamilySpec ex{FamilyId::K2JoinSplit, n, k, 0};
            probes.push_back({ex, family_membership(g, ex, mopts)});
            break;
        }
        case TheoremId::T2_11: {
            v.evidence.spectral_target = "graph";
            v.evidence.comparison = ">=";
            value = adjacency_spectral_radius(g, sopts).value;
            double nd = n;
            double tail = opts.thm211 == Thm211Variant::Statement ? 2.0 / std::sqrt(nd - 2.0)
                                                                  : 2.0 / std::sqrt(nd - 1.0);
            threshold = nd * nd / (nd - 1.0) - nd * k / (nd - 1.0) - tail;
            v.notes.push_back(opts.thm211 == Thm211Variant::Statement
                                  ? "threshold tail 2/sqrt(n-2) (statement variant)"
                                  : "threshold tail 2/sqrt(n-1) (proof variant)");
            FamilySpec ex{FamilyId::K1JoinSplit, n, k, 0};
            probes.push_back({ex, family_membership(g, ex, mopts)});
            break;
        }
        case TheoremId::T2_12: {
            v.evidence.spectral_target = "complement";
            v.evidence.comparison = "<=";
            value = adjacency_spectral_radius(g.complement(), sopts).value;
            threshold = std::sqrt(static_cast<double>(k - 1) * (n - k - 1));
            FamilySpec e1{FamilyId::TwoCliquesJoinK2, n, k, 0};
            FamilySpec e2{FamilyId::TwoCliquesJoinO2, n, k, 0};
            probes.push_back({e1, family_membership(g, e1, mopts)});
            probes.push_back({e2, family_membership(g, e2, mopts)});
            if (n == 2 * k) {
                FamilySpec es{FamilyId::ESn, n, 0, 0};
                probes.push_back({es, family_membership(g, es, mopts)});
            }
            FamilySpec s1{FamilyId::StatementJoinK2, n, k, 0};
            FamilySpec s2{FamilyId::StatementJoinO2, n, k, 0};
            statement_probes.push_back({s1, family_membership(g, s1, mopts)});
            statement_probes.push_back({s2, family_membership(g, s2, mopts)});
            break;
        }
        case TheoremId::T2_13: {
            v.evidence.spectral_target = "complement";
            v.evidence.comparison = "<=";
            value = adjacency_spectral_radius(g.complement(), sopts).value;
            threshold = std::sqrt(static_cast<double>(k) * (n - k - 1));
            FamilySpec ex{FamilyId::K1JoinSplit, n, k, 0};
            probes.push_back({ex, family_membership(g, ex, mopts)});
            if (n == 2 * k + 1) {
                FamilySpec ew{FamilyId::EWn, n, 0, 0};
                probes.push_back({ew, family_membership(g, ew, mopts)});
            }
            FamilySpec s1{FamilyId::StatementJoinK1, n, k, 0};
            statement_probes.push_back({s1, family_membership(g, s1, mopts)});
            break;
        }
        default: raise(ErrorCode::Internal, "unreachable");
    }

    v.evidence.spectral_value = value;
    v.evidence.threshold = threshold;
    conclude(v, compare_with_slack(value, threshold, v.evidence.comparison, opts.epsilon), probes,
             statement_probes);
    return v;
}

TheoremVerdict check_bipartite(TheoremId id, const BipartiteGraph& b, int k, const TheoremOptions& opts) {
    TheoremVerdict v;
    v.theorem = id;
    int n = b.y_size();
    v.evidence.n = n;
    v.evidence.k = k;
    v.evidence.min_degree = b.order() > 0 ? b.min_degree() : 0;

    auto not_met = [&](const std::string& reason) {
        v.hypothesis = HypothesisStatus::NotMet;
        v.hypothesis_detail = reason;
        return v;
    };

    if (k < 1) return not_met("needs k >= 1");
    if (!b.nearly_balanced())
        return not_met("input is not nearly balanced with |X| = |Y| - 1 (got " +
                       std::to_string(b.x_size()) + ", " + std::to_string(b.y_size()) + ")");
    long long n_floor = 0;
    switch (id) {
        case TheoremId::T3_9:
            n_floor = std::max<long long>((static_cast<long long>(k) * k * k + 2 * k + 4 + 1) / 2,
                                          static_cast<long long>(k + 1) * (k + 1));
            break;
        case TheoremId::T3_10: n_floor = 2LL * k; break;
        case TheoremId::T3_11: n_floor = static_cast<long long>(k + 1) * (k + 1); break;
        default: raise(ErrorCode::Internal, "not a bipartite theorem");
    }
    if (n < n_floor) return not_met("needs n >= " + std::to_string(n_floor));
    if (v.evidence.min_degree < k)
        return not_met("minimum degree " + std::to_string(v.evidence.min_degree) + " below k");

    double value = 0.0, threshold = 0.0;
    std::vector<ExceptionProbe> probes;
    MembershipOptions mopts = opts.membership;
    SpectralOptions sopts = opts.spectral;
    sopts.tol = opts.tol;

    switch (id) {
        case TheoremId::T3_9: {
            v.evidence.spectral_kind = "mu";
            v.evidence.spectral_target = "graph";
            v.evidence.comparison = ">";
            value = adjacency_spectral_radius(b.embed(), sopts).value;
            threshold = std::sqrt(static_cast<double>(n) * (n - k - 1));
            FamilySpec ex{FamilyId::Cnk, n, k, 0};
            probes.push_back({ex, family_membership(b, ex, mopts)});
            break;
        }
        case TheoremId::T3_10: {
            v.evidence.spectral_kind = "mu";
            v.evidence.spectral_target = "quasi_complement";
            v.evidence.comparison = "<=";
            value = adjacency_spectral_radius(b.quasi_complement().embed(), sopts).value;
            threshold = std::sqrt(static_cast<double>(k) * (n - k));
            for (int kk = 1; 2 * kk <= n; ++kk) {
                FamilySpec ex{FamilyId::ScriptC, n, kk, 0};
                probes.push_back({ex, family_membership(b, ex, mopts)});
            }
            if (n == 4) {
                const auto& variants = gamma2_minus_v_variants();
                for (int i = 0; i < static_cast<int>(variants.size()); ++i) {
                    FamilySpec ex{FamilyId::Gamma2MinusV, 4, 0, i};
                    MembershipResult r;
                    if (b.x_size() == variants[i].x_size() && b.y_size() == variants[i].y_size() &&
                        bipartite_isomorphic(b, variants[i], false)) {
                        r.member = true;
                        r.witness = MembershipWitness{std::nullopt, {}, {}, i};
                    }
                    probes.push_back({ex, r});
                }
            }
            break;
        }
        case TheoremId::T3_11: {
            v.evidence.spectral_kind = "q";
            v.evidence.spectral_target = "graph";
            v.evidence.comparison = ">";
            value = q_spectral_radius(b.embed(), sopts).value;
            threshold = (static_cast<double>(n) * (2 * n - k - 2) + static_cast<double>(k + 1) * (k + 1)) /
                        static_cast<double>(n);
            FamilySpec ex{FamilyId::Cnk, n, k, 0};
            probes.push_back({ex, subgraph_of_cnk(b, n, k, mopts)});
            break;
        }
        default: raise(ErrorCode::Internal, "unreachable");
    }

    v.evidence.spectral_value = value;
    v.evidence.threshold = threshold;
    conclude(v, compare_with_slack(value, threshold, v.evidence.comparison, opts.epsilon), probes, {});
    return v;
}

} // namespace

TheoremVerdict check_theorem(TheoremId id, const Graph& g, int k, const TheoremOptions& opts) {
    switch (id) {
        case TheoremId::T2_10:
        case TheoremId::T2_11:
        case TheoremId::T2_12:
        case TheoremId::T2_13:
            return check_simple(id, g, k, opts);
        default:
            raise(ErrorCode::InvalidArgument,
                  std::string(theorem_id_name(id)) + " needs a bipartite input with fixed parts");
    }
}

TheoremVerdict check_theorem(TheoremId id, const BipartiteGraph& b, int k, const TheoremOptions& opts) {
    switch (id) {
        case TheoremId::T3_9:
        case TheoremId::T3_10:
        case TheoremId::T3_11:
            return check_bipartite(id, b, k, opts);
        default:
            return check_simple(id, b.embed(), k, opts);
    }
}

SharpnessReport verify_sharpness(const std::string& lemma_id, int n, int k, const SpectralOptions& spectral) {
    SharpnessReport report;
    report.lemma = lemma_id;
    report.n = n;
    report.k = k;

    Graph extremal;
    if (lemma_id == "L2_9") {
        if (k < 2 || n < 2LL * k * k + 1)
            raise(ErrorCode::HypothesisNotMet, "L2_9 needs k >= 2 and n >= 2k^2+1");
        extremal = std::get<Graph>(build_family({FamilyId::K2JoinSplit, n, k, 0}));
        report.threshold = static_cast<double>(n - k);
    } else if (lemma_id == "L3_8") {
        if (k < 1 || 2LL * n < static_cast<long long>(k) * k * k + 2 * k + 4)
            raise(ErrorCode::HypothesisNotMet, "L3_8 needs k >= 1 and n >= k^3/2 + k + 2");
        extremal = std::get<BipartiteGraph>(build_family({FamilyId::Cnk, n, k, 0})).embed();
        report.threshold = std::sqrt(static_cast<double>(n) * (n - k - 1));
    } else {
        raise(ErrorCode::InvalidArgument, "unknown sharpness lemma " + lemma_id);
    }

    report.extremal_mu = adjacency_spectral_radius(extremal, spectral).value;
    report.all_strict = true;
    report.max_subgraph_mu = -1.0;
    for (const auto& e : extremal.edges()) {
        Graph cut = extremal.without_edge(e.first, e.second);
        if (cut.min_degree() < k) continue;
        double mu = adjacency_spectral_radius(cut, spectral).value;
        report.entries.push_back({e, mu});
        ++report.admissible_deletions;
        if (mu > report.max_subgraph_mu) {
            report.max_subgraph_mu = mu;
            report.worst_edge = e;
        }
        if (!(mu < report.threshold)) report.all_strict = false;
    }
    return report;
}

RemarkReport check_remark_3_11(int n, int k, const SpectralOptions& spectral) {
    if (k < 1 || n < static_cast<long long>(k + 1) * (k + 1))
        raise(ErrorCode::HypothesisNotMet, "remark needs k >= 1 and n >= (k+1)^2");
    RemarkReport report;
    report.n = n;
    report.k = k;

    using I = __int128;
    I N = n, K = k;
    I factored = (K + 1 - 2 * N) * (K - N) *
                 ((4 - K * K) * N * N + (-6 * K + K * K * K - 4) * N + 1 + 3 * K * K + 3 * K + K * K * K);

    I x = 2 * N - K - 1;
    I c3 = -4 * N + K + 4;
    I c2 = -N * K + 6 + 5 * N * N - 2 * K * K - 11 * N + K;
    I c1 = 7 * N * N + 5 * N * K + 2 + 6 * N * K * K - 2 * N * N * K - 7 * N - 2 * N * N * N - 6 * K * K -
           2 * K * K * K - 3 * K;
    I c0 = 2 * N * K * K * K - K * K * K - 2 * K - 3 * K * K + 8 * N * K * K + 7 * N * K + 2 * N * N * N * K -
           4 * N * N * K * K - 7 * N * N * K;
    I quartic = ((((x + c3) * x + c2) * x + c1) * x + c0);
    I expanded = -x * (N - 1 - x) * quartic;

    auto to_ll = [](I v) {
        if (v > I(INT64_MAX) || v < I(INT64_MIN)) raise(ErrorCode::DomainError, "polynomial value overflows");
        return static_cast<long long>(v);
    };
    report.f_at_point_factored = to_ll(factored);
    report.f_at_point_expanded = to_ll(expanded);
    report.codings_agree = factored == expanded;
    report.f_negative = factored < 0;
    report.theorem_threshold =
        (static_cast<double>(n) * (2 * n - k - 2) + static_cast<double>(k + 1) * (k + 1)) / n;

    if (2 * n - 1 <= 512) {
        BipartiteGraph c = std::get<BipartiteGraph>(build_family({FamilyId::Cnk, n, k, 0}));
        // drop one edge between the degree-n X class and the degree-(n-k-1)
        // Y class: X index k is the first such X vertex, Y index 0 the first
        // such Y vertex
        BipartiteGraph cut = c.without_edge(k, 0);
        double q = q_spectral_radius(cut.embed(), spectral).value;
        report.q_deleted = q;
        report.q_threshold = static_cast<double>(2 * n - k - 1);
        report.q_exceeds = q > *report.q_threshold;
    }
    return report;
}

namespace {

ValidationReport validate_embedded(const TheoremVerdict& verdict, const Graph& g, const OracleOptions& opts) {
    ValidationReport report;
    if (!verdict.conclusion) {
        report.detail = "no conclusion to validate";
        return report;
    }
    CertifiedProperty prop = theorem_property(verdict.theorem);
    PropertyQuery query;
    switch (prop) {
        case CertifiedProperty::HamiltonConnected: query = PropertyQuery::hamilton_connected(); break;
        case CertifiedProperty::TraceableFromEveryVertex:
            query = PropertyQuery::traceable_from_every_vertex();
            break;
        case CertifiedProperty::Traceable: query = PropertyQuery::traceable(); break;
    }
    if (g.order() > opts.cap) {
        report.detail = "oracle cap exceeded; validation skipped";
        return report;
    }
    OracleAnswer answer = check_property(g, query, opts);
    report.checked = true;
    report.oracle_holds = answer.holds;
    bool expect_holds = *verdict.conclusion == ConclusionType::Certified;
    report.agreed = answer.holds == expect_holds;
    if (!report.agreed) {
        report.detail = std::string("oracle ") + (answer.holds ? "confirms" : "refutes") + " " +
                        property_name(prop) + " but the verdict says " +
                        (expect_holds ? "Certified" : "Exception");
    } else {
        report.detail = "oracle agrees";
    }
    return report;
}

} // namespace

ValidationReport cross_validate(const TheoremVerdict& verdict, const Graph& g, const OracleOptions& opts) {
    return validate_embedded(verdict, g, opts);
}

ValidationReport cross_validate(const TheoremVerdict& verdict, const BipartiteGraph& b,
                                const OracleOptions& opts) {
    return validate_embedded(verdict, b.embed(), opts);
}

} // namespace spectraham
