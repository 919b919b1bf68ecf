#pragma once

#include "misbip/exact.hpp"
#include "misbip/graph.hpp"
#include "misbip/mis_enum.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace misbip::extremal
{
    enum class Filter
    {
        none,
        k4_free,
        max_degree_3,
        both,
    };

    auto to_string(Filter f) -> std::string;
    /// "none", "k4-free", "maxdeg3", "both". Throws std::invalid_argument otherwise.
    auto parse_filter(const std::string &name) -> Filter;
    auto passes(const Graph &g, Filter f) -> bool;

    inline constexpr int order_limit = 8;

    /// Upper-triangle adjacency bits in column order (0,1), (0,2), (1,2), (0,3), ...; the first
    /// pair is the most significant of the n(n-1)/2 low bits.
    using Key = std::uint64_t;

    auto adjacency_key(const Graph &g) -> Key;
    auto graph_from_key(int n, Key key) -> Graph;

    struct CanonicalGraph
    {
        Graph graph;
        Key canonical_key = 0;

        auto operator<=>(const CanonicalGraph &other) const
        {
            return std::pair{graph.order(), canonical_key} <=> std::pair{other.graph.order(), other.canonical_key};
        }
        auto operator==(const CanonicalGraph &other) const -> bool
        {
            return graph.order() == other.graph.order() && canonical_key == other.canonical_key;
        }
    };

    /// Minimum adjacency key over all vertex orderings, with the graph relabelled to attain it.
    /// Throws GuardError above order_limit vertices.
    auto canonical_form(const Graph &g) -> CanonicalGraph;
    auto canonical_key(const Graph &g) -> Key;

    /// One representative per isomorphism class among graphs on n vertices accepted by `keep`,
    /// ordered by canonical key. `keep` must be closed under deleting a vertex.
    auto generate_all(int n, const std::function<bool(const Graph &)> &keep, int workers = 1)
        -> std::vector<CanonicalGraph>;
    auto generate_all(int n, Filter filter, int workers = 1) -> std::vector<CanonicalGraph>;

    /// Components are exactly k cliques of order 3 or 4.
    auto is_clique_union(const Graph &g, int k) -> bool;

    struct ExtremalReport
    {
        int n = 0;
        int k = 0;
        Rational bound;
        std::vector<CanonicalGraph> attainers;
        std::uint64_t classes = 0;
        /// Bucket b counts classes with b/10 <= mis_{<=k} / bound < (b+1)/10; bucket 10 is equality.
        std::vector<std::uint64_t> slack_histogram = std::vector<std::uint64_t>(11, 0);
        /// Classes above the bound.
        std::vector<CanonicalGraph> violations;
        /// Classes where equality and the clique-union structure disagree.
        std::vector<CanonicalGraph> structure_mismatches;

        auto passed() const -> bool { return violations.empty() && structure_mismatches.empty(); }
    };

    /// mis_{<=k} <= 3^(4k-n) 4^(n-3k) over every class on n vertices, for k = 0..n.
    auto verify_theorem2(int n, int workers = 1) -> std::vector<ExtremalReport>;
    auto verify_theorem2(const std::vector<CanonicalGraph> &classes, const std::vector<SizeProfile> &profiles, int n)
        -> std::vector<ExtremalReport>;

    enum class SlackCondition
    {
        degree_one,  // 8/9
        isolated,    // 16/27
        long_cycle,  // 11/12
    };

    auto to_string(SlackCondition c) -> std::string;
    auto slack_factor(SlackCondition c) -> Rational;
    auto has_condition(const Graph &g, SlackCondition c) -> bool;

    struct SlackWitness
    {
        CanonicalGraph graph;
        int k = 0;
    };

    struct SlackReport
    {
        SlackCondition condition{};
        Rational factor;
        std::uint64_t classes = 0;
        std::uint64_t pairs_checked = 0;
        std::vector<SlackWitness> tight;
        std::vector<SlackWitness> violations;
    };

    /// Over classes of maximum degree <= 2 on n vertices and k = 0..n.
    auto verify_degree2_constants(int n, int workers = 1) -> std::vector<SlackReport>;

    enum class BoundSelector
    {
        eppstein,
        nielsen,
        corollary1,
        four_power, // 4^(n/4)
    };

    auto to_string(BoundSelector b) -> std::string;
    auto parse_bound(const std::string &name) -> BoundSelector;

    struct TightnessRow
    {
        int n = 0;
        int k = 0;
        std::uint64_t max_count = 0; // max mis_k
        std::string argmax;          // graph6 of a maximiser, empty if max_count = 0
        long double log_bound = 0;
        long double ratio = 0;
    };

    auto log_bound(BoundSelector bound, int n, int k, double eta = 0) -> long double;

    /// Largest mis_k per (n, k) over the given graphs, against the chosen bound.
    auto tightness_scan(const std::vector<Graph> &graphs, BoundSelector bound, double eta = 0)
        -> std::vector<TightnessRow>;
    /// Same, with profiles already computed (profiles[i] belongs to graphs[i]).
    auto tightness_scan(const std::vector<Graph> &graphs, const std::vector<SizeProfile> &profiles, BoundSelector bound,
                        double eta = 0) -> std::vector<TightnessRow>;
    auto tightness_scan(int n, Filter filter, BoundSelector bound, double eta = 0, int workers = 1)
        -> std::vector<TightnessRow>;

    struct MibsScan
    {
        int n = 0;
        std::uint64_t classes = 0;
        std::uint64_t max_distinct = 0;
        std::string argmax;
        long double ratio_twelve = 0; // max / 12^(n/4)
        long double ratio_six = 0;    // max / 6^(n/4)
    };

    auto mibs_scan(int n, Filter filter, int workers = 1) -> MibsScan;

    /// One persisted line per class: canonical graph6, profile and slack against Eppstein and Nielsen.
    struct ClassRecord
    {
        std::string graph6;
        int n = 0;
        SizeProfile profile;
        std::vector<double> eppstein_slack; // mis_{<=k} / bound, k = 0..n
        std::vector<double> nielsen_slack;
    };

    auto make_record(const CanonicalGraph &c, const SizeProfile &profile) -> ClassRecord;
    auto record_to_line(const ClassRecord &r) -> std::string;
    auto record_from_line(const std::string &line) -> ClassRecord;
    /// Records keyed by graph6; a missing file gives an empty map. Blank lines are skipped.
    auto read_records(const std::string &path) -> std::map<std::string, ClassRecord>;

    /// Runs fn(i) for i in [0, count) on up to `workers` threads.
    void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)> &fn);
}
