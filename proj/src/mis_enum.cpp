#include "misbip/mis_enum.hpp"

#include "misbip/errors.hpp"

#include <algorithm>
#include <string>

namespace misbip
{
    auto SizeProfile::total() const -> std::uint64_t
    {
        std::uint64_t sum = 0;
        for (auto c : counts)
            sum += c;
        return sum;
    }

    auto SizeProfile::at_most(int k) const -> std::uint64_t
    {
        std::uint64_t sum = 0;
        for (int i = 0; i <= k && i < static_cast<int>(counts.size()); ++i)
            sum += counts[i];
        return sum;
    }

    auto SizeProfile::at(int k) const -> std::uint64_t
    {
        return k < 0 || k >= static_cast<int>(counts.size()) ? 0 : counts[k];
    }

    auto convolve(const SizeProfile &a, const SizeProfile &b) -> SizeProfile
    {
        SizeProfile result(static_cast<int>(a.counts.size() + b.counts.size()) - 2);
        for (std::size_t i = 0; i < a.counts.size(); ++i)
            for (std::size_t j = 0; j < b.counts.size(); ++j)
                result.counts[i + j] += a.counts[i] * b.counts[j];
        return result;
    }

    namespace
    {
        auto family_from(int n, std::vector<VertexSet> sets) -> MisFamily
        {
            std::sort(sets.begin(), sets.end());
            MisFamily family{std::move(sets), SizeProfile(n)};
            for (auto s : family.sets)
                ++family.profile.counts[s.size()];
            return family;
        }

        struct Pivoter
        {
            const Graph &g;
            VertexSet within;
            const std::function<void(VertexSet)> &visit;

            // vertices of `within` that may join a set containing v
            auto compatible(int v) const -> VertexSet { return within - g.closed_neighbours(v); }

            void expand(VertexSet chosen, VertexSet candidates, VertexSet excluded)
            {
                if (candidates.empty()) {
                    if (excluded.empty())
                        visit(chosen);
                    return;
                }
                int pivot = -1, best = -1;
                for (int u : candidates | excluded) {
                    int c = (candidates & compatible(u)).size();
                    if (c > best) {
                        best = c;
                        pivot = u;
                    }
                }
                for (int v : candidates - compatible(pivot)) {
                    expand(chosen | VertexSet::single(v), candidates & compatible(v), excluded & compatible(v));
                    candidates.erase(v);
                    excluded.insert(v);
                }
            }
        };

        struct Brancher
        {
            const Graph &g;
            std::vector<VertexSet> leaves;
            std::uint64_t nodes = 0;

            void branch(VertexSet remaining, int budget, VertexSet chosen)
            {
                ++nodes;
                if (remaining.empty()) {
                    leaves.push_back(chosen);
                    return;
                }
                int u = -1, best = -1;
                for (int v : remaining) {
                    int d = (g.neighbours(v) & remaining).size();
                    if (d > best) {
                        best = d;
                        u = v;
                    }
                }
                branch(remaining - VertexSet::single(u), budget, chosen);
                if (budget >= 1)
                    branch(remaining - g.closed_neighbours(u), budget - 1, chosen | VertexSet::single(u));
            }
        };
    }

    auto enumerate_mis_bruteforce(const Graph &g) -> MisFamily
    {
        const int n = g.order();
        if (n > bruteforce_order_limit)
            throw GuardError{"brute-force MIS enumeration limited to " + std::to_string(bruteforce_order_limit) +
                " vertices, got " + std::to_string(n)};
        std::vector<VertexSet> sets;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            if (is_maximal_independent(g, VertexSet{mask}))
                sets.emplace_back(mask);
        return family_from(n, std::move(sets));
    }

    void for_each_mis(const Graph &g, VertexSet within, const std::function<void(VertexSet)> &visit)
    {
        Pivoter{g, within, visit}.expand(VertexSet{}, within, VertexSet{});
    }

    void for_each_mis(const Graph &g, const std::function<void(VertexSet)> &visit)
    {
        for_each_mis(g, g.vertices(), visit);
    }

    auto enumerate_mis(const Graph &g) -> MisFamily
    {
        std::vector<VertexSet> sets;
        for_each_mis(g, [&](VertexSet s) { sets.push_back(s); });
        return family_from(g.order(), std::move(sets));
    }

    auto enumerate_mis_branching(const Graph &g, int k_cap) -> BranchingResult
    {
        BranchingResult result;
        if (k_cap < 0) {
            result.family = family_from(g.order(), {});
            return result;
        }
        Brancher brancher{g, {}, 0};
        brancher.branch(g.vertices(), k_cap, VertexSet{});
        result.nodes = brancher.nodes;
        result.candidates = brancher.leaves.size();

        std::vector<VertexSet> sets;
        for (auto s : brancher.leaves)
            if (is_maximal_independent(g, s))
                sets.push_back(s);
        result.family = family_from(g.order(), std::move(sets));
        return result;
    }

    auto mis_profile(const Graph &g) -> SizeProfile
    {
        SizeProfile profile(g.order());
        for_each_mis(g, [&](VertexSet s) { ++profile.counts[s.size()]; });
        return profile;
    }
}
