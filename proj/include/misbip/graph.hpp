#pragma once

#include "misbip/vertex_set.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace misbip
{
    class GraphError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    using Edge = std::pair<int, int>;

    /// Simple undirected graph on at most 64 vertices, one neighbour mask per vertex.
    /// Immutable once constructed.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);
        Graph(int n, std::span<const Edge> edges);
        Graph(int n, std::initializer_list<Edge> edges);

        /// Builds from raw rows; rows must be loop-free and symmetric.
        static auto from_rows(std::span<const VertexSet> rows) -> Graph;

        auto order() const -> int { return n_; }
        auto vertices() const -> VertexSet { return VertexSet::universe(n_); }
        auto neighbours(int v) const -> VertexSet { return adj_[v]; }
        auto closed_neighbours(int v) const -> VertexSet { return adj_[v] | VertexSet::single(v); }
        auto adjacent(int u, int v) const -> bool { return adj_[u].contains(v); }
        auto degree(int v) const -> int { return adj_[v].size(); }
        auto edge_count() const -> int;
        auto edges() const -> std::vector<Edge>;

        /// Union of the neighbourhoods of every member of s.
        auto neighbours(VertexSet s) const -> VertexSet;

        auto operator==(const Graph &) const -> bool = default;

    private:
        int n_ = 0;
        std::array<VertexSet, max_order> adj_{};
    };

    struct DegreeStats
    {
        int max_degree = 0;
        std::vector<int> degrees;
    };

    auto degree_stats(const Graph &g) -> DegreeStats;

    auto is_k4_free(const Graph &g) -> bool;

    /// Some K4 as a vertex set, if one exists.
    auto find_k4(const Graph &g) -> std::optional<VertexSet>;

    auto is_independent(const Graph &g, VertexSet s) -> bool;

    /// Independent and dominating.
    auto is_maximal_independent(const Graph &g, VertexSet s) -> bool;

    struct InducedSubgraph
    {
        Graph graph;
        /// Original index of each vertex of `graph`.
        std::vector<int> to_original;

        auto lift(VertexSet local) const -> VertexSet;
    };

    /// Vertex-induced subgraph on s, vertices renumbered in increasing order.
    auto induced(const Graph &g, VertexSet s) -> InducedSubgraph;

    /// One side of a proper two-colouring of g[within], or nothing if g[within] has an odd cycle.
    auto two_colouring(const Graph &g, VertexSet within) -> std::optional<VertexSet>;
    auto two_colouring(const Graph &g) -> std::optional<VertexSet>;

    auto is_bipartite(const Graph &g, VertexSet within) -> bool;
    auto is_bipartite(const Graph &g) -> bool;

    /// Connected components in order of their smallest vertex.
    auto components(const Graph &g) -> std::vector<VertexSet>;

    /// Vertex set of g[s] is a clique.
    auto is_clique(const Graph &g, VertexSet s) -> bool;

    namespace graphs
    {
        auto empty(int n) -> Graph;
        auto complete(int n) -> Graph;
        auto path(int n) -> Graph;
        auto cycle(int n) -> Graph;
        /// K4 minus the edge {0, 1}.
        auto diamond() -> Graph;
        /// Vertices of b are shifted past those of a.
        auto disjoint_union(const Graph &a, const Graph &b) -> Graph;
        auto copies(const Graph &g, int t) -> Graph;
    }
}
