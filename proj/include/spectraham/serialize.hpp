#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "spectraham/closure.hpp"
#include "spectraham/conditions.hpp"
#include "spectraham/families.hpp"
#include "spectraham/graph.hpp"
#include "spectraham/oracle.hpp"
#include "spectraham/spectral.hpp"
#include "spectraham/survey.hpp"
#include "spectraham/theorems.hpp"

namespace spectraham {

using Json = nlohmann::ordered_json;

/// "g6:<graph6>" plus ";x=<x_size>" when a bipartition is attached; the hash
/// input for report digests.
std::string canonical_graph_string(const Graph& g, std::optional<int> x_size);
std::string graph_digest(const Graph& g, std::optional<int> x_size);

Json graph_to_json(const Graph& g, std::optional<int> x_size);
Json stats_to_json(const GraphStats& s);
std::string graph_to_dot(const Graph& g, std::optional<int> x_size);

Json spectral_to_json(const SpectralResult& r, bool include_vector = true);
Json bounds_to_json(const BoundsReport& r);
Json closure_to_json(const ClosureResult<Graph>& r);
Json closure_to_json(const ClosureResult<BipartiteGraph>& r);
Json oracle_to_json(const OracleAnswer& a);
Json condition_to_json(const ConditionVerdict& v);
Json membership_to_json(const MembershipResult& m);
Json verdict_to_json(const TheoremVerdict& v);
Json sharpness_to_json(const SharpnessReport& r);
Json remark_to_json(const RemarkReport& r);
Json validation_to_json(const ValidationReport& r);
Json survey_to_json(const SurveyResult& r);

} // namespace spectraham
