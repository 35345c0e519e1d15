#include "spectraham/survey.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "spectraham/util.hpp"

namespace spectraham {

namespace {

struct SampleOutcome {
    struct Entry {
        TheoremId theorem;
        HypothesisStatus hypothesis;
        std::optional<ConclusionType> conclusion;
        bool oracle_checked = false;
        bool oracle_agreed = false;
        std::string mismatch;
    };
    std::vector<Entry> entries;
    bool repaired = false;
    long long edges = 0;
};

Graph generate_simple(int n, int k, Rng& rng, bool& repaired) {
    std::vector<Edge> edges;
    double p = 0.15 + 0.7 * rng.u01();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) edges.emplace_back(u, v);
    GraphBuilder builder(n);
    for (const auto& [u, v] : edges) builder.add_edge(u, v);
    Graph g = std::move(builder).freeze();
    repaired = false;
    GraphBuilder repair(n);
    for (const auto& [u, v] : g.edges()) repair.add_edge(u, v);
    for (int v = 0; v < n; ++v) {
        while (true) {
            int deg = 0;
            for (int u = 0; u < n; ++u) deg += repair.has_edge(v, u) ? 1 : 0;
            if (deg >= k) break;
            int u = rng.int_in(0, n - 1);
            if (u == v || repair.has_edge(v, u)) continue;
            repair.add_edge(v, u);
            repaired = true;
        }
    }
    return std::move(repair).freeze();
}

BipartiteGraph generate_bipartite(int nx, int ny, int k, Rng& rng, bool& repaired) {
    double p = 0.15 + 0.7 * rng.u01();
    std::vector<Edge> edges;
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            if (rng.coin(p)) edges.emplace_back(x, y);
    BipartiteGraph b = BipartiteGraph::from_edges(nx, ny, edges);
    repaired = false;
    for (int x = 0; x < nx; ++x) {
        while (b.degree_x(x) < k) {
            int y = rng.int_in(0, ny - 1);
            if (b.has_edge(x, y)) continue;
            b = b.with_edge(x, y);
            repaired = true;
        }
    }
    for (int y = 0; y < ny; ++y) {
        while (b.degree_y(y) < k) {
            int x = rng.int_in(0, nx - 1);
            if (b.has_edge(x, y)) continue;
            b = b.with_edge(x, y);
            repaired = true;
        }
    }
    return b;
}

template <typename GraphT>
void run_checkers(const GraphT& g, const std::vector<TheoremId>& theorems, int k,
                  const TheoremOptions& topts, const OracleOptions& oopts, SampleOutcome& outcome,
                  long sample_index) {
    for (TheoremId id : theorems) {
        SampleOutcome::Entry entry;
        entry.theorem = id;
        TheoremVerdict verdict = check_theorem(id, g, k, topts);
        entry.hypothesis = verdict.hypothesis;
        entry.conclusion = verdict.conclusion;
        if (verdict.conclusion) {
            ValidationReport validation = cross_validate(verdict, g, oopts);
            entry.oracle_checked = validation.checked;
            entry.oracle_agreed = validation.agreed;
            if (validation.checked && !validation.agreed)
                entry.mismatch = "sample " + std::to_string(sample_index) + " " + theorem_id_name(id) + ": " +
                                 validation.detail;
        }
        outcome.entries.push_back(std::move(entry));
    }
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SPECTRAHAM_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return std::clamp<int>(static_cast<int>(hw), 1, 8);
}

} // namespace

const char* survey_regime_name(SurveyRegime r) {
    switch (r) {
        case SurveyRegime::Simple: return "simple";
        case SurveyRegime::BipartiteBalanced: return "bipartite_balanced";
        case SurveyRegime::BipartiteNearlyBalanced: return "bipartite_nearly_balanced";
    }
    return "unknown";
}

std::optional<SurveyRegime> survey_regime_from_name(const std::string& name) {
    if (name == "simple") return SurveyRegime::Simple;
    if (name == "bipartite_balanced" || name == "balanced") return SurveyRegime::BipartiteBalanced;
    if (name == "bipartite_nearly_balanced" || name == "nearly_balanced")
        return SurveyRegime::BipartiteNearlyBalanced;
    return std::nullopt;
}

SurveyResult run_survey(const SurveyParams& params) {
    if (params.n < 2 || params.samples < 1 || params.k < 1)
        raise(ErrorCode::InvalidArgument, "survey needs n >= 2, k >= 1, samples >= 1");
    // largest achievable minimum degree per regime
    int max_k = params.regime == SurveyRegime::BipartiteBalanced ? params.n : params.n - 1;
    if (params.k > max_k)
        raise(ErrorCode::InvalidArgument,
              "k = " + std::to_string(params.k) + " cannot be met by the regime (max " +
                  std::to_string(max_k) + ")");

    const std::vector<TheoremId> simple_theorems{TheoremId::T2_10, TheoremId::T2_11, TheoremId::T2_12,
                                                 TheoremId::T2_13};
    const std::vector<TheoremId> bipartite_theorems{TheoremId::T3_9, TheoremId::T3_10, TheoremId::T3_11};

    TheoremOptions topts;
    topts.tol = params.tol;
    topts.epsilon = params.epsilon;
    topts.thm211 = params.thm211;
    OracleOptions oopts;
    oopts.cap = params.oracle_cap;

    std::vector<SampleOutcome> outcomes(params.samples);
    auto worker = [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            Rng rng(Rng::mix(params.seed, static_cast<std::uint64_t>(i)));
            SampleOutcome& outcome = outcomes[i];
            if (params.regime == SurveyRegime::Simple) {
                Graph g = generate_simple(params.n, params.k, rng, outcome.repaired);
                outcome.edges = g.edge_count();
                run_checkers(g, simple_theorems, params.k, topts, oopts, outcome, i);
            } else {
                int nx = params.regime == SurveyRegime::BipartiteBalanced ? params.n : params.n - 1;
                BipartiteGraph b = generate_bipartite(nx, params.n, params.k, rng, outcome.repaired);
                outcome.edges = b.edge_count();
                run_checkers(b, bipartite_theorems, params.k, topts, oopts, outcome, i);
                run_checkers(b.embed(), simple_theorems, params.k, topts, oopts, outcome, i);
            }
        }
    };

    int threads = resolve_threads(params.threads);
    threads = std::min<long>(threads, params.samples);
    if (threads <= 1) {
        worker(0, params.samples);
    } else {
        std::vector<std::thread> pool;
        long chunk = (params.samples + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            long lo = t * chunk, hi = std::min<long>(params.samples, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    SurveyResult result;
    result.params = params;
    result.threads_used = threads;
    for (const auto& outcome : outcomes) {
        if (outcome.repaired) ++result.repaired_samples;
        result.total_edges += outcome.edges;
        for (const auto& entry : outcome.entries) {
            TheoremCounts& counts = result.per_theorem[theorem_id_name(entry.theorem)];
            ++counts.considered;
            switch (entry.hypothesis) {
                case HypothesisStatus::Met: ++counts.hypothesis_met; break;
                case HypothesisStatus::NotMet: ++counts.hypothesis_not_met; break;
                case HypothesisStatus::Boundary: ++counts.boundary; break;
            }
            if (entry.conclusion == ConclusionType::Certified) {
                ++counts.certified;
                if (entry.oracle_checked) {
                    ++counts.certified_oracle_checked;
                    if (entry.oracle_agreed) ++counts.certified_oracle_confirmed;
                }
            } else if (entry.conclusion == ConclusionType::Exception) {
                ++counts.exception;
                if (entry.oracle_checked) {
                    ++counts.exception_oracle_checked;
                    if (entry.oracle_agreed) ++counts.exception_oracle_confirmed;
                }
            }
            if (!entry.mismatch.empty() && result.mismatches.size() < 8)
                result.mismatches.push_back(entry.mismatch);
        }
    }
    return result;
}

} // namespace spectraham
