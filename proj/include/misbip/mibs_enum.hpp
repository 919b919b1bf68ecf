#pragma once

#include "misbip/graph.hpp"

#include <cstdint>
#include <vector>

namespace misbip
{
    /// Bipartition (A, B) of a maximal induced bipartite subgraph with A maximal independent in G,
    /// B maximal independent in G - A and |A| >= |B|. Equal-size pairs are stored once, smaller
    /// mask first, so for those either side may be the one maximal in G.
    struct Witness
    {
        VertexSet a, b;

        auto operator<=>(const Witness &) const = default;
    };

    struct MibsRecord
    {
        VertexSet vertices;
        std::vector<Witness> witnesses;
    };

    struct MibsCensus
    {
        /// Sorted by vertex mask.
        std::vector<MibsRecord> records;
        std::uint64_t distinct_count = 0;
        /// Generated pairs (A, B) whose union is maximal bipartite and |A| >= |B|, both orders of a tie
        /// counted; 12 for K4.
        std::uint64_t ordered_pair_count = 0;
        /// Every pair A in MIS(G), B in MIS(G - A) visited.
        std::uint64_t generated_pairs = 0;
        /// Generated pairs whose union is not a maximal induced bipartite subgraph.
        std::uint64_t non_maximal_candidates = 0;
        /// Entry k: records having a witness with |A| = k.
        std::vector<std::uint64_t> a_size_histogram;
    };

    /// Bipartite, and adding any outside vertex creates an odd cycle.
    auto is_maximal_bipartite(const Graph &g, VertexSet s) -> bool;

    /// Scans all subsets. Records only, no witnesses. Throws GuardError above 20 vertices.
    auto enumerate_mibs_bruteforce(const Graph &g) -> MibsCensus;

    /// Generates candidates A ∪ B over A in MIS(G) and B in MIS(G - A) and keeps the maximal ones.
    auto enumerate_mibs_canonical(const Graph &g) -> MibsCensus;

    struct ComponentIdentityReport
    {
        VertexSet k4;
        std::uint64_t mibs_graph = 0;
        std::uint64_t mibs_rest = 0;
        bool identity_holds = false;
        bool every_record_meets_k4_twice = false;

        auto passed() const -> bool { return identity_holds && every_record_meets_k4_twice; }
    };

    /// For a K4 component K: mibs(G) = 6 mibs(G - K), and every record has exactly two vertices of K.
    /// Throws PreconditionError if g has no K4 component.
    auto mibs_component_identity_check(const Graph &g) -> ComponentIdentityReport;
}
