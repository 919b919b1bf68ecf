#include "misbip/corpus.hpp"
#include "misbip/errors.hpp"
#include "misbip/mis_enum.hpp"
#include "misbip/theorem1.hpp"

#include <doctest.h>

#include <algorithm>

using namespace misbip;
using namespace misbip::theorem1;

namespace
{
    auto find(const std::vector<Check> &checks, const std::string &name) -> const Check &
    {
        auto it = std::find_if(checks.begin(), checks.end(), [&](const Check &c) { return c.name == name; });
        REQUIRE_MESSAGE(it != checks.end(), name);
        return *it;
    }

    // Claw centred at u with leaves u+1, u+2, u+3.
    auto claws(int count, std::vector<Edge> extra) -> Graph
    {
        for (int c = 0; c < count; ++c)
            for (int leaf = 1; leaf <= 3; ++leaf)
                extra.emplace_back(4 * c, 4 * c + leaf);
        return Graph(4 * count, extra);
    }

    auto centres(int count) -> VertexSet
    {
        VertexSet s;
        for (int c = 0; c < count; ++c)
            s.insert(4 * c);
        return s;
    }
}

TEST_CASE("diamond decomposition")
{
    auto g = graphs::diamond();
    auto dec = decompose(g, VertexSet::single(2));
    CHECK(dec.k == 1);
    CHECK(dec.i1.empty());
    CHECK(dec.j2.empty());
    CHECK(dec.i3 == VertexSet::single(2));
    CHECK(dec.ell == 1);
    REQUIRE(dec.cells.size() == 1);
    auto &c = dec.cells[0];
    CHECK(c.u == 2);
    CHECK(c.x == 0);
    CHECK(c.y == 1);
    CHECK(c.z == 3);
    CHECK(c.vertices == g.vertices());
    CHECK(all_passed(decomposition_checks(g, dec)));
}

TEST_CASE("cycle of six has no cells")
{
    auto g = graphs::cycle(6);
    auto dec = decompose(g, VertexSet::of({0, 2, 4}));
    CHECK(dec.i1 == dec.i0);
    CHECK(dec.j1 == dec.j0);
    CHECK(dec.ell == 0);
    CHECK(dec.cells.empty());
    CHECK(all_passed(decomposition_checks(g, dec)));

    auto st = select(g, dec, {});
    auto stats = transversal_census(g, dec, st);
    CHECK(stats.total == 1);
    CHECK(stats.good_count == 1);
    CHECK(stats.p_good == 1);
}

TEST_CASE("preconditions")
{
    auto star = Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK_THROWS_AS(decompose(star, VertexSet::single(0)), PreconditionError);
    CHECK_THROWS_AS(decompose(graphs::complete(4), VertexSet::single(0)), PreconditionError);
    CHECK_THROWS_AS(decompose(graphs::cycle(5), VertexSet::of({0, 1, 3})), PreconditionError);
    CHECK_THROWS_AS(decompose(graphs::cycle(6), VertexSet::of({0, 2})), PreconditionError);
    CHECK_THROWS_AS(decompose(graphs::path(3), VertexSet::single(5)), PreconditionError);

    auto dec = decompose(graphs::diamond(), VertexSet::single(2));
    CHECK_THROWS_AS(select(graphs::diamond(), dec, VertexSet::single(1)), PreconditionError);
}

TEST_CASE("selection on disjoint diamonds")
{
    auto one = graphs::diamond();
    auto dec1 = decompose(one, VertexSet::single(2));
    auto st1 = select(one, dec1, {});
    CHECK(st1.i4 == VertexSet::single(0));
    CHECK(st1.i5 == VertexSet::single(0));
    CHECK(st1.i6 == VertexSet::single(0));
    CHECK(st1.u == one.vertices());
    CHECK(all_passed(selection_checks(one, dec1, st1)));

    auto two = graphs::copies(graphs::diamond(), 2);
    auto dec2 = decompose(two, VertexSet::of({2, 6}));
    auto st2 = select(two, dec2, {});
    CHECK(st2.i6.size() == 2);
    CHECK(st2.cell_graph.edge_count() == 0);

    auto all = select(two, dec2, VertexSet::of({0, 1}));
    CHECK(all.i4.empty());
    CHECK(all.i5.empty());
    CHECK(all.u.empty());
}

TEST_CASE("bad event cases")
{
    SUBCASE("no outside neighbour")
    {
        auto g = graphs::diamond();
        auto dec = decompose(g, VertexSet::single(2));
        auto st = select(g, dec, {});
        auto e = bad_event_probability(g, dec, st, 0, 0);
        CHECK(e.q == Rational(1, 4));
        CHECK(e.kind == BadCase::no_outside_neighbour);
        CHECK(cell_bad_probability(g, dec, st, 0) == Rational(1, 2));
        CHECK_THROWS_AS(bad_event_probability(g, dec, st, 0, 3), PreconditionError);
    }
    SUBCASE("one outside neighbour")
    {
        // y of the first diamond sees x of the second
        auto g = Graph(8, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}, {1, 4}});
        auto dec = decompose(g, VertexSet::of({2, 6}));
        REQUIRE(dec.ell == 2);
        CHECK(dec.cells[0].y == 1);
        CHECK(dec.cells[1].x == 4);
        auto st = select(g, dec, {});
        auto e = bad_event_probability(g, dec, st, 0, 0);
        CHECK(e.q == Rational(3, 16));
        CHECK(e.kind == BadCase::one_outside_neighbour);
        CHECK(st.i6 == VertexSet::single(0));
        auto stats = transversal_census(g, dec, st);
        CHECK(stats.per_cell_bad_prob == stats.per_cell_bad_prob_exhaustive);
        CHECK(all_passed(verify_product_bound(g, dec, st, stats)));
    }
    SUBCASE("two neighbours in one cell")
    {
        auto g = claws(2, {{2, 5}, {2, 6}});
        auto dec = decompose(g, centres(2));
        REQUIRE(dec.ell == 2);
        auto st = select(g, dec, {});
        auto e = bad_event_probability(g, dec, st, 0, 1);
        CHECK(e.q == Rational(1, 8));
        CHECK(e.kind == BadCase::two_in_same_cell);
        auto stats = transversal_census(g, dec, st);
        CHECK(stats.per_cell_bad_prob == stats.per_cell_bad_prob_exhaustive);
    }
    SUBCASE("two neighbours in distinct cells")
    {
        auto g = claws(3, {{2, 5}, {2, 9}});
        auto dec = decompose(g, centres(3));
        REQUIRE(dec.ell == 3);
        auto st = select(g, dec, {});
        auto e = bad_event_probability(g, dec, st, 0, 1);
        CHECK(e.q == Rational(9, 64));
        CHECK(e.kind == BadCase::two_in_distinct_cells);
        auto stats = transversal_census(g, dec, st);
        CHECK(stats.per_cell_bad_prob == stats.per_cell_bad_prob_exhaustive);
        CHECK(all_passed(verify_product_bound(g, dec, st, stats)));
    }
}

TEST_CASE("census on diamonds")
{
    auto g = graphs::diamond();
    auto dec = decompose(g, VertexSet::single(2));
    auto st = select(g, dec, {});
    auto stats = transversal_census(g, dec, st);
    CHECK(stats.total == 4);
    CHECK(stats.good_count == 2);
    CHECK(stats.p_good == Rational(1, 2));
    CHECK(stats.product_bound == Rational(1, 2));
    CHECK(all_passed(verify_product_bound(g, dec, st, stats)));

    auto two = graphs::copies(graphs::diamond(), 2);
    auto dec2 = decompose(two, VertexSet::of({2, 6}));
    auto st2 = select(two, dec2, {});
    auto stats2 = transversal_census(two, dec2, st2);
    CHECK(stats2.total == 16);
    CHECK(stats2.p_good == Rational(1, 4));
    auto checks = verify_product_bound(two, dec2, st2, stats2);
    CHECK(find(checks, "independent_cells_census_equals_product").passed);
    CHECK(all_passed(checks));
}

TEST_CASE("census guard and Monte Carlo")
{
    auto g = graphs::copies(graphs::diamond(), 12);
    VertexSet i0;
    for (int c = 0; c < 12; ++c)
        i0.insert(4 * c + 2);
    auto dec = decompose(g, i0);
    auto st = select(g, dec, {});
    CHECK_THROWS_AS(transversal_census(g, dec, st), GuardError);
    auto est = transversal_estimate(g, dec, st, 20000, 5);
    CHECK(est.p_good < 0.01);
    CHECK(est.ci_low <= est.p_good);
    CHECK(est.p_good <= est.ci_high);
    auto again = transversal_estimate(g, dec, st, 20000, 5);
    CHECK(again.p_good == est.p_good);
}

TEST_CASE("capture on disjoint diamonds")
{
    for (int t = 1; t <= 4; ++t) {
        auto g = graphs::copies(graphs::diamond(), t);
        auto report = run_pipeline(g, {});
        CAPTURE(t);
        CHECK(report.decomposition.ell == t);
        REQUIRE(report.capture);
        CHECK(report.capture->passed());
        std::uint64_t covered = 0;
        for (auto &f : report.capture->families)
            covered += f.size;
        CHECK(covered == report.capture->sets_of_size_k);
        CHECK(report.passed());
    }
}

TEST_CASE("literal shared-neighbour rule can overlap cells")
{
    // vertex 1 is adjacent to two degree-3 I0 vertices and to the I1 vertex 7
    auto g = Graph(8, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 5}, {4, 6}, {7, 1}});
    const auto i0 = VertexSet::of({0, 4, 7});

    auto literal = decompose(g, i0, J2Rule::excluding_j1);
    CHECK(literal.j2.empty());
    CHECK(literal.ell == 2);
    CHECK(! find(decomposition_checks(g, literal), "cells_disjoint").passed);

    auto repaired = decompose(g, i0);
    CHECK(repaired.j2 == VertexSet::single(1));
    CHECK(repaired.ell == 0);
    CHECK(all_passed(decomposition_checks(g, repaired)));
}

TEST_CASE("corpus pipeline runs pass")
{
    auto entries = corpus::read_manifest(std::string{MISBIP_TEST_DATA} + "/pipeline_corpus.txt");
    REQUIRE(entries.size() >= 100);
    for (auto &e : entries) {
        auto g = corpus::random_k4_free_subcubic(e.n, e.seed);
        auto report = run_pipeline(g, {});
        CAPTURE(e.seed);
        for (auto &c : report.checks)
            if (c.asserted && ! c.passed)
                FAIL_CHECK(c.name << " " << c.detail);
        CHECK(report.passed());
        auto &dec = report.decomposition;
        CHECK(dec.i0 == minimum_maximal_independent_set(g));
        CHECK(is_maximal_independent(g, dec.i0));
    }
}

TEST_CASE("minimum maximal independent set")
{
    CHECK(minimum_maximal_independent_set(graphs::path(3)) == VertexSet::single(1));
    CHECK(minimum_maximal_independent_set(graphs::cycle(6)) == VertexSet::of({0, 3}));
    CHECK(minimum_maximal_independent_set(graphs::diamond()) == VertexSet::single(2));
}
