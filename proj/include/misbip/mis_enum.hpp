#pragma once

#include "misbip/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace misbip
{
    /// mis_k(G) for k = 0..n. Counts are exact in 64 bits: mis(G) <= 3^(64/3) < 2^34.
    struct SizeProfile
    {
        std::vector<std::uint64_t> counts;

        SizeProfile() = default;
        explicit SizeProfile(int n) : counts(static_cast<std::size_t>(n) + 1, 0) {}

        auto total() const -> std::uint64_t;
        /// mis_{<=k}(G); k may exceed n or be negative.
        auto at_most(int k) const -> std::uint64_t;
        auto at(int k) const -> std::uint64_t;

        auto operator==(const SizeProfile &) const -> bool = default;
    };

    /// Profile of a disjoint union.
    auto convolve(const SizeProfile &a, const SizeProfile &b) -> SizeProfile;

    /// MIS(G), sorted by mask.
    struct MisFamily
    {
        std::vector<VertexSet> sets;
        SizeProfile profile;
    };

    inline constexpr int bruteforce_order_limit = 20;

    /// Tests every subset. Throws GuardError above 20 vertices.
    auto enumerate_mis_bruteforce(const Graph &g) -> MisFamily;

    /// Pivoting maximal-clique enumeration on the complement of g; calls visit once per maximal
    /// independent set, in no particular order.
    void for_each_mis(const Graph &g, const std::function<void(VertexSet)> &visit);

    /// Same, restricted to the vertices of `within` (the maximal independent sets of g[within]).
    void for_each_mis(const Graph &g, VertexSet within, const std::function<void(VertexSet)> &visit);

    auto enumerate_mis(const Graph &g) -> MisFamily;

    struct BranchingResult
    {
        MisFamily family;
        /// Nodes of the branching tree, leaves included.
        std::uint64_t nodes = 0;
        /// Leaves reached with budget left, before the maximality filter.
        std::uint64_t candidates = 0;
    };

    /// Recursion on a maximum-degree vertex u (lowest index on ties): every maximal independent
    /// set of G is one of G-u, or u together with one of G-N[u]. Leaves are filtered for
    /// maximality in g, leaving exactly the maximal independent sets of size <= k_cap.
    auto enumerate_mis_branching(const Graph &g, int k_cap) -> BranchingResult;

    auto mis_profile(const Graph &g) -> SizeProfile;
}
