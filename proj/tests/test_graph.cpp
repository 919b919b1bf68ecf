#include "oracles.hpp"

#include "misbip/corpus.hpp"
#include "misbip/graph.hpp"

#include <doctest.h>

using namespace misbip;

TEST_CASE("vertex sets")
{
    auto s = VertexSet::of({0, 3, 63});
    CHECK(s.size() == 3);
    CHECK(s.contains(63));
    CHECK(s.first() == 0);
    CHECK(s.to_vector() == std::vector<int>{0, 3, 63});
    CHECK((s - VertexSet::single(3)) == VertexSet::of({0, 63}));
    CHECK(VertexSet::universe(64).size() == 64);
    CHECK(VertexSet::universe(0).empty());
    CHECK(VertexSet::of({1, 2}).subset_of(VertexSet::universe(3)));
    CHECK(lexicographically_less(VertexSet::of({0, 5}), VertexSet::of({1, 2})));
    CHECK(! lexicographically_less(VertexSet::of({1, 2}), VertexSet::of({0, 5})));
    CHECK(to_string(VertexSet::of({2, 4})) == "{2,4}");
}

TEST_CASE("construction rejects loops and bad indices")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph(65), GraphError);
    std::array rows{VertexSet::single(1), VertexSet{}};
    CHECK_THROWS_AS(Graph::from_rows(rows), GraphError);
}

TEST_CASE("degree statistics")
{
    CHECK(degree_stats(graphs::complete(4)).max_degree == 3);
    auto c5 = degree_stats(graphs::cycle(5));
    CHECK(c5.degrees == std::vector<int>(5, 2));
    CHECK(degree_stats(graphs::empty(3)).max_degree == 0);
}

TEST_CASE("K4 detection")
{
    CHECK(! is_k4_free(graphs::complete(4)));
    CHECK(is_k4_free(graphs::diamond()));
    CHECK(! is_k4_free(graphs::copies(graphs::complete(4), 2)));
    CHECK(find_k4(graphs::disjoint_union(graphs::cycle(5), graphs::complete(4))) == VertexSet::of({5, 6, 7, 8}));

    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        auto g = corpus::random_graph(n, 0.3 + 0.4 * static_cast<double>(seed % 5) / 4, seed);
        CAPTURE(seed);
        CHECK(is_k4_free(g) == ! oracle::has_k4(g));
    }
}

TEST_CASE("induced subgraphs")
{
    auto k3 = induced(graphs::complete(4), VertexSet::of({0, 2, 3}));
    CHECK(k3.graph == graphs::complete(3));
    CHECK(k3.to_original == std::vector<int>{0, 2, 3});
    CHECK(k3.lift(VertexSet::of({1})) == VertexSet::single(2));

    CHECK(induced(graphs::cycle(5), VertexSet::of({0, 1, 2, 3})).graph == graphs::path(4));

    auto g = corpus::random_graph(10, 0.4, 7);
    CHECK(induced(g, g.vertices()).graph == g);

    for (int u = 0; u < g.order(); ++u) {
        auto h = induced(g, g.vertices() - VertexSet::single(u));
        REQUIRE(h.graph.order() == g.order() - 1);
        for (int i = 0; i < h.graph.order(); ++i) {
            int v = h.to_original[i];
            CHECK(h.graph.degree(i) == g.degree(v) - (g.adjacent(u, v) ? 1 : 0));
        }
    }
}

TEST_CASE("bipartiteness")
{
    CHECK(! is_bipartite(graphs::cycle(5)));
    CHECK(is_bipartite(graphs::path(4)));
    CHECK(! is_bipartite(graphs::complete(4)));
    CHECK(is_bipartite(graphs::cycle(6)));
    CHECK(is_bipartite(graphs::complete(4), VertexSet::of({0, 1})));

    auto side = two_colouring(graphs::path(4));
    REQUIRE(side);
    CHECK((*side == VertexSet::of({0, 2}) || *side == VertexSet::of({1, 3})));

    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const int n = 3 + static_cast<int>(seed % 5);
        auto g = corpus::random_graph(n, 0.35, seed * 31);
        CAPTURE(seed);
        CHECK(is_bipartite(g) == ! oracle::has_odd_cycle(g, g.vertices().bits()));
        auto sub = VertexSet{seed * 2654435761u & g.vertices().bits()};
        CHECK(is_bipartite(g, sub) == ! oracle::has_odd_cycle(g, sub.bits()));
        if (auto col = two_colouring(g, sub)) {
            CHECK(col->subset_of(sub));
            CHECK(is_independent(g, *col));
            CHECK(is_independent(g, sub - *col));
        }
    }
}

TEST_CASE("independence predicates")
{
    auto c5 = graphs::cycle(5);
    CHECK(is_independent(c5, VertexSet::of({0, 2})));
    CHECK(is_maximal_independent(c5, VertexSet::of({0, 2})));
    CHECK(! is_maximal_independent(c5, VertexSet::of({0})));
    CHECK(! is_independent(c5, VertexSet::of({0, 1})));
    CHECK(is_maximal_independent(Graph(0), VertexSet{}));
    CHECK(is_clique(graphs::diamond(), VertexSet::of({0, 2, 3})));
    CHECK(! is_clique(graphs::diamond(), VertexSet::of({0, 1, 2})));
}

TEST_CASE("components")
{
    auto parts = components(graphs::disjoint_union(graphs::complete(3), graphs::complete(4)));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 3);
    CHECK(parts[1].size() == 4);
    CHECK(components(graphs::cycle(7)).size() == 1);
    CHECK(components(graphs::empty(3)) == std::vector{VertexSet::single(0), VertexSet::single(1), VertexSet::single(2)});
    CHECK(components(Graph(0)).empty());
}

TEST_CASE("named graphs")
{
    auto d = graphs::diamond();
    CHECK(d.edge_count() == 5);
    CHECK(! d.adjacent(0, 1));
    CHECK(d.degree(2) == 3);
    CHECK(d.degree(3) == 3);
    CHECK(graphs::copies(graphs::complete(3), 3).edge_count() == 9);
    CHECK(graphs::path(1).edge_count() == 0);
    CHECK(graphs::cycle(4).edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("random K4-free subcubic graphs")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 6 + static_cast<int>(seed % 20);
        auto g = corpus::random_k4_free_subcubic(n, seed);
        CAPTURE(seed);
        CHECK(g.order() == n);
        CHECK(degree_stats(g).max_degree <= 3);
        CHECK(! oracle::has_k4(g));
        CHECK(g == corpus::random_k4_free_subcubic(n, seed));
    }
}

TEST_CASE("manifest parsing")
{
    auto entries = corpus::parse_manifest("# comment\n12 8\n\n13 20 # trailing\n");
    REQUIRE(entries.size() == 2);
    CHECK(entries[1].seed == 13);
    CHECK(entries[1].n == 20);
    CHECK_THROWS(corpus::parse_manifest("12\n"));
}
