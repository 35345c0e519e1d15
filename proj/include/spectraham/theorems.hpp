#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectraham/families.hpp"
#include "spectraham/graph.hpp"
#include "spectraham/oracle.hpp"
#include "spectraham/spectral.hpp"

namespace spectraham {

enum class TheoremId { T2_10, T2_11, T2_12, T2_13, T3_9, T3_10, T3_11 };

const char* theorem_id_name(TheoremId id);
std::optional<TheoremId> theorem_id_from_name(const std::string& name);

enum class HypothesisStatus { Met, NotMet, Boundary };
enum class ConclusionType { Certified, Exception };
enum class CertifiedProperty { HamiltonConnected, TraceableFromEveryVertex, Traceable };

CertifiedProperty theorem_property(TheoremId id);
const char* property_name(CertifiedProperty p);

enum class Thm211Variant { Statement, Proof };

struct TheoremOptions {
    double tol = 1e-10;
    double epsilon = 1e-6; // boundary slack around the threshold
    Thm211Variant thm211 = Thm211Variant::Statement;
    MembershipOptions membership;
    SpectralOptions spectral;
};

struct TheoremEvidence {
    int n = 0;
    int k = 0;
    int min_degree = 0;
    std::string spectral_kind;   // "mu" or "q"
    std::string spectral_target; // "graph" / "complement" / "quasi_complement"
    std::string comparison;      // ">=", "<=", ">"
    std::optional<double> spectral_value;
    std::optional<double> threshold;
};

struct TheoremVerdict {
    TheoremId theorem = TheoremId::T2_10;
    HypothesisStatus hypothesis = HypothesisStatus::NotMet;
    std::string hypothesis_detail;
    std::optional<ConclusionType> conclusion;
    std::optional<CertifiedProperty> property;     // Certified only
    std::optional<FamilySpec> exception_family;    // Exception only
    std::optional<MembershipWitness> exception_witness;
    TheoremEvidence evidence;
    std::vector<std::string> notes;
};

/// Evaluate one of the seven theorem checkers. Exception matching is
/// structural and takes precedence over the spectral comparison: a graph
/// equal to (or inside, for the ⊆-style exceptions) a theorem's exceptional
/// family is reported as Exception whether or not the spectral hypothesis
/// holds, since the theorem certifies nothing for it either way.
TheoremVerdict check_theorem(TheoremId id, const Graph& g, int k, const TheoremOptions& opts = {});
TheoremVerdict check_theorem(TheoremId id, const BipartiteGraph& b, int k, const TheoremOptions& opts = {});

struct SharpnessEntry {
    Edge removed;
    double mu = 0.0;
};

struct SharpnessReport {
    std::string lemma; // "L2_9" or "L3_8"
    int n = 0;
    int k = 0;
    double threshold = 0.0;
    double extremal_mu = 0.0; // μ of the untouched extremal graph
    int admissible_deletions = 0;
    double max_subgraph_mu = 0.0;
    Edge worst_edge{-1, -1};
    bool all_strict = false; // every admissible deletion stays below threshold
    std::vector<SharpnessEntry> entries;
};

/// Enumerate the single-edge-deleted subgraphs of the lemma's extremal graph
/// that keep δ >= k and compare each spectral radius against the threshold.
SharpnessReport verify_sharpness(const std::string& lemma_id, int n, int k,
                                 const SpectralOptions& spectral = {});

struct RemarkReport {
    int n = 0;
    int k = 0;
    long long f_at_point_factored = 0; // printed factored form at x = 2n-k-1
    long long f_at_point_expanded = 0; // determinant expansion at the same x
    bool codings_agree = false;
    bool f_negative = false;
    double theorem_threshold = 0.0; // (n(2n-k-2)+(k+1)^2)/n
    std::optional<double> q_threshold; // 2n-k-1
    std::optional<double> q_deleted;   // q(C_n^k minus one Y-Z edge)
    std::optional<bool> q_exceeds;
};

/// Exact integer evaluation of the sextic at x = 2n-k-1 through two
/// independent codings, plus the numeric q of C_n^k minus one Y-Z edge when
/// the order is small enough to eigensolve.
RemarkReport check_remark_3_11(int n, int k, const SpectralOptions& spectral = {});

struct ValidationReport {
    bool checked = false; // false when there is nothing to validate or the oracle cap blocks
    bool agreed = true;
    std::optional<bool> oracle_holds;
    std::string detail;
};

ValidationReport cross_validate(const TheoremVerdict& verdict, const Graph& g, const OracleOptions& opts = {});
ValidationReport cross_validate(const TheoremVerdict& verdict, const BipartiteGraph& b,
                                const OracleOptions& opts = {});

} // namespace spectraham
