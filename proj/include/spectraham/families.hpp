#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spectraham/graph.hpp"

namespace spectraham {

/// Named graph families. The join-split ids follow the constructions the
/// proofs derive: TwoCliquesJoinK2 is (K_{k-1}+K_{n-k-1}) ∨ K2 while
/// StatementJoinK2 is the literal K_{k-1,n-k-1} ∨ K2 reading; both are
/// exposed so reports can surface which one an input matches.
enum class FamilyId {
    K2JoinSplit,          // K2 ∨ (K_{n-k-1} + K_{k-1})
    K1JoinSplit,          // K1 ∨ (K_{n-k-1} + K_k)
    TwoCliquesJoinK2,     // (K_{k-1} + K_{n-k-1}) ∨ K2
    TwoCliquesJoinO2,     // (K_{k-1} + K_{n-k-1}) ∨ O2
    StatementJoinK2,      // K_{k-1,n-k-1} ∨ K2
    StatementJoinO2,      // K_{k-1,n-k-1} ∨ O2
    StatementJoinK1,      // K_{k,n-k-1} ∨ K1
    Bnk,                  // O_{k,n-k} ⊔ K_{n-k,k}
    Cnk,                  // O_{k,n-k} ⊔ K_{n-k-1,k}
    ESn,                  // set-valued, even order
    EWn,                  // set-valued, odd order
    ScriptB,              // { O_{k,n-k} ⊔ G(X,Y) : |X|=n-k, |Y|=k }
    ScriptC,              // { O_{k,n-k} ⊔ G(X,Y) : |X|=n-k-1, |Y|=k }
    Gamma1,               // order-8 exceptional balanced bipartite graph
    Gamma2,               // order-8 exceptional balanced bipartite graph
    Gamma2MinusV,         // Gamma2 minus a full-degree vertex
    CompleteBipartiteHalf // K_{n/2,n/2} as a plain graph
};

struct FamilySpec {
    FamilyId id = FamilyId::Bnk;
    int n = 0;
    int k = 0;
    int variant = 0; // Gamma2MinusV deletion index
};

const char* family_id_name(FamilyId id);
std::optional<FamilyId> family_id_from_name(const std::string& name);
bool family_is_set_valued(FamilyId id);
bool family_is_bipartite(FamilyId id);

using BuiltGraph = std::variant<Graph, BipartiteGraph>;

/// Construct the named graph. InvalidFamilyParams for out-of-range
/// parameters or set-valued families (sample those instead).
BuiltGraph build_family(const FamilySpec& spec);

struct MembershipWitness {
    std::optional<int> r;        // ES/EW split parameter
    std::vector<int> subset;     // S (ES/EW), Y2 (Script*), X1 (subgraph tests)
    std::vector<int> subset2;    // X1 (Script*), Y1 (subgraph tests)
    std::optional<int> variant;  // Gamma2MinusV deletion index
};

struct MembershipResult {
    bool member = false;
    std::optional<MembershipWitness> witness;
};

struct MembershipOptions {
    int cap = 16;          // order cap for subset-search memberships
    long work_budget = 4000000; // combination guard for subgraph embeddings
};

MembershipResult family_membership(const Graph& g, const FamilySpec& spec, const MembershipOptions& = {});
MembershipResult family_membership(const BipartiteGraph& b, const FamilySpec& spec, const MembershipOptions& = {});

/// Spanning-subgraph tests: does b fit inside B_n^k / C_n^k under some
/// part-respecting assignment? Witness carries the (X1, Y1) hole.
MembershipResult subgraph_of_bnk(const BipartiteGraph& b, int n, int k, const MembershipOptions& = {});
MembershipResult subgraph_of_cnk(const BipartiteGraph& b, int n, int k, const MembershipOptions& = {});

/// Deterministic pseudorandom members of a set-valued family.
std::vector<BuiltGraph> sample_family_members(const FamilySpec& spec, int count, std::uint64_t seed);

/// Part-respecting isomorphism for small bipartite graphs; with
/// allow_part_swap the transposed orientation is tried too.
bool bipartite_isomorphic(const BipartiteGraph& a, const BipartiteGraph& b, bool allow_part_swap);

const BipartiteGraph& gamma1();
const BipartiteGraph& gamma2();
/// All deletions of a full-degree Gamma2 vertex, presented with parts
/// oriented |X| = |Y| - 1 and deduplicated up to isomorphism.
const std::vector<BipartiteGraph>& gamma2_minus_v_variants();

/// d-regular circulant on m vertices (offsets 1..d/2 plus the antipode for
/// odd d); m·d must be even and d < m.
Graph circulant_regular(int m, int d);

} // namespace spectraham
