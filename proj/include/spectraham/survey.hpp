#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spectraham/theorems.hpp"

namespace spectraham {

enum class SurveyRegime { Simple, BipartiteBalanced, BipartiteNearlyBalanced };

const char* survey_regime_name(SurveyRegime r);
std::optional<SurveyRegime> survey_regime_from_name(const std::string& name);

struct SurveyParams {
    SurveyRegime regime = SurveyRegime::Simple;
    int n = 10; // order for simple graphs, Y-part size for bipartite regimes
    int k = 2;
    int samples = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    double epsilon = 1e-6;
    int oracle_cap = 24;
    int threads = 0; // 0: SPECTRAHAM_THREADS env or hardware concurrency
    Thm211Variant thm211 = Thm211Variant::Statement;
};

struct TheoremCounts {
    long considered = 0;
    long hypothesis_met = 0;
    long hypothesis_not_met = 0;
    long boundary = 0;
    long certified = 0;
    long exception = 0;
    long certified_oracle_checked = 0;
    long certified_oracle_confirmed = 0;
    long exception_oracle_checked = 0;
    long exception_oracle_confirmed = 0; // oracle agrees the property fails
};

struct SurveyResult {
    SurveyParams params;
    int threads_used = 1;
    long repaired_samples = 0; // samples that needed min-degree repair
    long long total_edges = 0;
    std::map<std::string, TheoremCounts> per_theorem;
    std::vector<std::string> mismatches; // first few certified-vs-oracle disagreements
};

/// Seeded random sweep: generate G(n,p) (bipartite across the parts for the
/// bipartite regimes), repair to δ >= k by adding random edges at deficient
/// vertices, run every applicable theorem checker, and confirm concluded
/// verdicts against the exact oracle. Per-sample seeds derive from the run
/// seed and sample index, so aggregation is order-independent and the result
/// does not depend on the worker count.
SurveyResult run_survey(const SurveyParams& params);

} // namespace spectraham
