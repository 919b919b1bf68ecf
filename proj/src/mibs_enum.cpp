#include "misbip/mibs_enum.hpp"

#include "misbip/errors.hpp"
#include "misbip/mis_enum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

namespace misbip
{
    auto is_maximal_bipartite(const Graph &g, VertexSet s) -> bool
    {
        if (! is_bipartite(g, s))
            return false;
        for (int w : g.vertices() - s)
            if (is_bipartite(g, s | VertexSet::single(w)))
                return false;
        return true;
    }

    auto enumerate_mibs_bruteforce(const Graph &g) -> MibsCensus
    {
        const int n = g.order();
        if (n > bruteforce_order_limit)
            throw GuardError{"brute-force MIBS enumeration limited to " + std::to_string(bruteforce_order_limit) +
                " vertices, got " + std::to_string(n)};

        const std::uint64_t count = std::uint64_t{1} << n;
        std::vector<bool> bipartite(count);
        for (std::uint64_t mask = 0; mask < count; ++mask)
            bipartite[mask] = is_bipartite(g, VertexSet{mask});

        MibsCensus census;
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            if (! bipartite[mask])
                continue;
            bool maximal = true;
            for (int w = 0; w < n && maximal; ++w)
                if (! ((mask >> w) & 1U) && bipartite[mask | (std::uint64_t{1} << w)])
                    maximal = false;
            if (maximal)
                census.records.push_back({VertexSet{mask}, {}});
        }
        census.distinct_count = census.records.size();
        census.a_size_histogram.assign(static_cast<std::size_t>(n) + 1, 0);
        return census;
    }

    auto enumerate_mibs_canonical(const Graph &g) -> MibsCensus
    {
        MibsCensus census;
        std::map<VertexSet, std::set<Witness>> found;
        std::unordered_map<std::uint64_t, bool> maximal_cache;

        for_each_mis(g, [&](VertexSet a) {
            for_each_mis(g, g.vertices() - a, [&](VertexSet b) {
                ++census.generated_pairs;
                auto candidate = a | b;
                auto [it, fresh] = maximal_cache.try_emplace(candidate.bits(), false);
                if (fresh)
                    it->second = is_maximal_bipartite(g, candidate);
                if (! it->second) {
                    ++census.non_maximal_candidates;
                    return;
                }
                auto &witnesses = found[candidate];
                if (a.size() < b.size())
                    return;
                ++census.ordered_pair_count;
                if (a.size() == b.size() && b < a)
                    witnesses.insert({b, a});
                else
                    witnesses.insert({a, b});
            });
        });

        census.a_size_histogram.assign(static_cast<std::size_t>(g.order()) + 1, 0);
        for (auto &[vertices, witnesses] : found) {
            std::set<int> sizes;
            for (auto &w : witnesses)
                sizes.insert(w.a.size());
            for (int k : sizes)
                ++census.a_size_histogram[k];
            census.records.push_back({vertices, {witnesses.begin(), witnesses.end()}});
        }
        census.distinct_count = census.records.size();
        return census;
    }

    auto mibs_component_identity_check(const Graph &g) -> ComponentIdentityReport
    {
        ComponentIdentityReport report;
        bool found = false;
        for (auto comp : components(g))
            if (comp.size() == 4 && is_clique(g, comp)) {
                report.k4 = comp;
                found = true;
                break;
            }
        if (! found)
            throw PreconditionError{"mibs component identity: graph has no K4 component"};

        auto whole = enumerate_mibs_canonical(g);
        auto rest = enumerate_mibs_canonical(induced(g, g.vertices() - report.k4).graph);
        report.mibs_graph = whole.distinct_count;
        report.mibs_rest = rest.distinct_count;
        report.identity_holds = report.mibs_graph == 6 * report.mibs_rest;
        report.every_record_meets_k4_twice = std::all_of(whole.records.begin(), whole.records.end(),
            [&](const MibsRecord &r) { return (r.vertices & report.k4).size() == 2; });
        return report;
    }
}
