#include "misbip/graph.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace misbip
{
    auto to_string(VertexSet s) -> std::string
    {
        std::ostringstream out;
        out << '{';
        bool first = true;
        for (int v : s) {
            if (! first)
                out << ',';
            out << v;
            first = false;
        }
        out << '}';
        return out.str();
    }

    namespace
    {
        void check_order(int n)
        {
            if (n < 0 || n > max_order)
                throw GraphError{"graph order " + std::to_string(n) + " outside 0..64"};
        }
    }

    Graph::Graph(int n) : n_(n)
    {
        check_order(n);
    }

    Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
    {
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw GraphError{"edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range"};
            if (u == v)
                throw GraphError{"loop at vertex " + std::to_string(u)};
            adj_[u].insert(v);
            adj_[v].insert(u);
        }
    }

    Graph::Graph(int n, std::initializer_list<Edge> edges) :
        Graph(n, std::span<const Edge>{edges.begin(), edges.size()})
    {
    }

    auto Graph::from_rows(std::span<const VertexSet> rows) -> Graph
    {
        Graph g(static_cast<int>(rows.size()));
        auto all = g.vertices();
        for (int v = 0; v < g.n_; ++v) {
            if (! rows[v].subset_of(all))
                throw GraphError{"row " + std::to_string(v) + " references a vertex out of range"};
            if (rows[v].contains(v))
                throw GraphError{"loop at vertex " + std::to_string(v)};
            g.adj_[v] = rows[v];
        }
        for (int v = 0; v < g.n_; ++v)
            for (int w : rows[v])
                if (! rows[w].contains(v))
                    throw GraphError{"rows are not symmetric at (" + std::to_string(v) + "," + std::to_string(w) + ")"};
        return g;
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0; v < n_; ++v)
            twice += adj_[v].size();
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (int v = 0; v < n_; ++v)
            for (int w : adj_[v])
                if (v < w)
                    result.emplace_back(v, w);
        return result;
    }

    auto Graph::neighbours(VertexSet s) const -> VertexSet
    {
        VertexSet result;
        for (int v : s)
            result |= adj_[v];
        return result;
    }

    auto degree_stats(const Graph &g) -> DegreeStats
    {
        DegreeStats stats;
        stats.degrees.reserve(g.order());
        for (int v = 0; v < g.order(); ++v) {
            stats.degrees.push_back(g.degree(v));
            stats.max_degree = std::max(stats.max_degree, g.degree(v));
        }
        return stats;
    }

    auto find_k4(const Graph &g) -> std::optional<VertexSet>
    {
        // every K4 contains a triangle u < v < w whose common neighbourhood has a vertex above w
        for (int u = 0; u < g.order(); ++u)
            for (int v : g.neighbours(u)) {
                if (v <= u)
                    continue;
                auto uv = g.neighbours(u) & g.neighbours(v);
                for (int w : uv) {
                    if (w <= v)
                        continue;
                    auto uvw = uv & g.neighbours(w);
                    for (int x : uvw)
                        if (x > w)
                            return VertexSet::of({u, v, w, x});
                }
            }
        return std::nullopt;
    }

    auto is_k4_free(const Graph &g) -> bool
    {
        return ! find_k4(g).has_value();
    }

    auto is_independent(const Graph &g, VertexSet s) -> bool
    {
        for (int v : s)
            if (g.neighbours(v).intersects(s))
                return false;
        return true;
    }

    auto is_maximal_independent(const Graph &g, VertexSet s) -> bool
    {
        return is_independent(g, s) && (s | g.neighbours(s)) == g.vertices();
    }

    auto InducedSubgraph::lift(VertexSet local) const -> VertexSet
    {
        VertexSet result;
        for (int v : local)
            result.insert(to_original.at(v));
        return result;
    }

    auto induced(const Graph &g, VertexSet s) -> InducedSubgraph
    {
        if (! s.subset_of(g.vertices()))
            throw GraphError{"induced: vertex set " + to_string(s) + " not contained in graph of order " + std::to_string(g.order())};

        InducedSubgraph result;
        result.to_original = s.to_vector();
        std::array<int, max_order> local{};
        for (std::size_t i = 0; i < result.to_original.size(); ++i)
            local[result.to_original[i]] = static_cast<int>(i);

        std::vector<VertexSet> rows(result.to_original.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int w : g.neighbours(result.to_original[i]) & s)
                rows[i].insert(local[w]);
        result.graph = Graph::from_rows(rows);
        return result;
    }

    auto two_colouring(const Graph &g, VertexSet within) -> std::optional<VertexSet>
    {
        // breadth-first layering per component; even layers form one side
        VertexSet side, seen;
        for (int root : within) {
            if (seen.contains(root))
                continue;
            auto frontier = VertexSet::single(root);
            bool even = true;
            while (! frontier.empty()) {
                seen |= frontier;
                if (even)
                    side |= frontier;
                frontier = (g.neighbours(frontier) & within) - seen;
                even = ! even;
            }
        }
        for (int v : within) {
            auto same = side.contains(v) ? side : within - side;
            if (g.neighbours(v).intersects(same))
                return std::nullopt;
        }
        return side;
    }

    auto two_colouring(const Graph &g) -> std::optional<VertexSet>
    {
        return two_colouring(g, g.vertices());
    }

    auto is_bipartite(const Graph &g, VertexSet within) -> bool
    {
        return two_colouring(g, within).has_value();
    }

    auto is_bipartite(const Graph &g) -> bool
    {
        return is_bipartite(g, g.vertices());
    }

    auto components(const Graph &g) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        auto unseen = g.vertices();
        while (! unseen.empty()) {
            auto comp = VertexSet::single(unseen.first());
            auto frontier = comp;
            while (! frontier.empty()) {
                frontier = g.neighbours(frontier) - comp;
                comp |= frontier;
            }
            unseen -= comp;
            result.push_back(comp);
        }
        return result;
    }

    auto is_clique(const Graph &g, VertexSet s) -> bool
    {
        for (int v : s)
            if (! (s - VertexSet::single(v)).subset_of(g.neighbours(v)))
                return false;
        return true;
    }

    namespace graphs
    {
        auto empty(int n) -> Graph
        {
            return Graph(n);
        }

        auto complete(int n) -> Graph
        {
            std::vector<Edge> es;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    es.emplace_back(u, v);
            return Graph(n, es);
        }

        auto path(int n) -> Graph
        {
            std::vector<Edge> es;
            for (int v = 0; v + 1 < n; ++v)
                es.emplace_back(v, v + 1);
            return Graph(n, es);
        }

        auto cycle(int n) -> Graph
        {
            if (n < 3)
                throw GraphError{"cycle needs at least 3 vertices"};
            auto es = path(n).edges();
            es.emplace_back(0, n - 1);
            return Graph(n, es);
        }

        auto diamond() -> Graph
        {
            return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        }

        auto disjoint_union(const Graph &a, const Graph &b) -> Graph
        {
            auto es = a.edges();
            for (auto [u, v] : b.edges())
                es.emplace_back(u + a.order(), v + a.order());
            return Graph(a.order() + b.order(), es);
        }

        auto copies(const Graph &g, int t) -> Graph
        {
            Graph result;
            for (int i = 0; i < t; ++i)
                result = disjoint_union(result, g);
            return result;
        }
    }
}
