#include "oracles.hpp"

#include "misbip/bounds.hpp"
#include "misbip/corpus.hpp"
#include "misbip/errors.hpp"
#include "misbip/extremal.hpp"
#include "misbip/graph_io.hpp"
#include "misbip/mibs_enum.hpp"

#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

using namespace misbip;
using namespace misbip::extremal;

namespace
{
    auto relabel(const Graph &g, std::uint64_t seed) -> Graph
    {
        std::vector<int> p(g.order());
        for (int i = 0; i < g.order(); ++i)
            p[i] = i;
        std::mt19937_64 rng{seed};
        std::shuffle(p.begin(), p.end(), rng);
        std::vector<Edge> e;
        for (auto [u, v] : g.edges())
            e.emplace_back(p[u], p[v]);
        return Graph(g.order(), e);
    }

    auto report_for(const std::vector<ExtremalReport> &reports, int k) -> const ExtremalReport &
    {
        auto it = std::find_if(reports.begin(), reports.end(), [&](const ExtremalReport &r) { return r.k == k; });
        REQUIRE(it != reports.end());
        return *it;
    }
}

TEST_CASE("class counts")
{
    const std::vector<std::size_t> expect{1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n < static_cast<int>(expect.size()); ++n) {
        auto classes = generate_all(n, Filter::none);
        CAPTURE(n);
        CHECK(classes.size() == expect[n]);
        CHECK(std::is_sorted(classes.begin(), classes.end()));
        if (n <= 6) {
            std::vector<Key> keys;
            for (auto &c : classes)
                keys.push_back(c.canonical_key);
            std::sort(keys.begin(), keys.end());
            CHECK(keys == oracle::class_keys(n));
        }
    }
    CHECK(generate_all(4, Filter::k4_free).size() == 10);
    CHECK(generate_all(4, Filter::max_degree_3).size() == 11);
    CHECK_THROWS(generate_all(order_limit + 1, Filter::none));
}

TEST_CASE("filters keep only matching classes")
{
    for (auto f : {Filter::k4_free, Filter::max_degree_3, Filter::both}) {
        auto kept = generate_all(6, f);
        auto all = generate_all(6, Filter::none);
        auto expect = std::count_if(all.begin(), all.end(), [&](const CanonicalGraph &c) { return passes(c.graph, f); });
        CHECK(static_cast<long>(kept.size()) == expect);
        CHECK(parse_filter(to_string(f)) == f);
    }
    CHECK_THROWS(parse_filter("planar"));
}

TEST_CASE("canonical form is a labelling invariant")
{
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const int n = 1 + static_cast<int>(seed % 8);
        auto g = corpus::random_graph(n, 0.2 + 0.1 * static_cast<double>(seed % 6), seed);
        auto c = canonical_form(g);
        CAPTURE(seed);
        CHECK(canonical_key(relabel(g, seed * 7)) == c.canonical_key);
        CHECK(adjacency_key(c.graph) == c.canonical_key);
        CHECK(graph_from_key(n, c.canonical_key) == c.graph);
        if (n <= 6)
            CHECK(c.canonical_key == oracle::min_key(g));
    }
}

TEST_CASE("Moon-Moser type extremal graphs")
{
    auto reports = verify_theorem2(6);
    for (auto &r : reports) {
        CAPTURE(r.k);
        CHECK(r.passed());
        CHECK(r.classes == 156);
    }
    auto &k2 = report_for(reports, 2);
    CHECK(k2.bound == 9);
    REQUIRE(k2.attainers.size() == 1);
    CHECK(to_graph6(k2.attainers[0].graph) == "EJaG");
    CHECK(is_clique_union(k2.attainers[0].graph, 2));
    CHECK(canonical_key(graphs::copies(graphs::complete(3), 2)) == k2.attainers[0].canonical_key);

    auto r7 = verify_theorem2(7);
    auto &k7 = report_for(r7, 2);
    REQUIRE(k7.attainers.size() == 1);
    CHECK(to_graph6(k7.attainers[0].graph) == "FJ]CG");
    CHECK(canonical_key(graphs::disjoint_union(graphs::complete(3), graphs::complete(4))) == k7.attainers[0].canonical_key);
    for (auto &r : r7)
        CHECK(r.passed());
}

TEST_CASE("clique unions")
{
    CHECK(is_clique_union(graphs::copies(graphs::complete(3), 2), 2));
    CHECK(! is_clique_union(graphs::copies(graphs::complete(3), 2), 3));
    CHECK(is_clique_union(graphs::disjoint_union(graphs::complete(3), graphs::complete(4)), 2));
    CHECK(! is_clique_union(graphs::disjoint_union(graphs::complete(2), graphs::complete(5)), 2));
    CHECK(! is_clique_union(graphs::cycle(6), 2));
}

TEST_CASE("degree two slack constants")
{
    CHECK(slack_factor(SlackCondition::degree_one) == Rational(8, 9));
    CHECK(slack_factor(SlackCondition::isolated) == Rational(16, 27));
    CHECK(slack_factor(SlackCondition::long_cycle) == Rational(11, 12));
    CHECK(has_condition(graphs::cycle(4), SlackCondition::long_cycle));
    CHECK(! has_condition(graphs::cycle(3), SlackCondition::long_cycle));
    CHECK(has_condition(graphs::path(3), SlackCondition::degree_one));
    CHECK(! has_condition(graphs::path(3), SlackCondition::isolated));

    // C4 with k = 2: two maximal independent sets against 11/12 of 81/16
    Rational c4{mis_profile(graphs::cycle(4)).at_most(2)};
    CHECK(c4 == 2);
    CHECK(c4 <= slack_factor(SlackCondition::long_cycle) * *bounds::eppstein(4, 2).exact);

    bool k1 = false, p2 = false;
    for (int n = 1; n <= 7; ++n)
        for (auto &r : verify_degree2_constants(n)) {
            CAPTURE(n);
            CHECK(r.violations.empty());
            for (auto &w : r.tight) {
                auto code = to_graph6(w.graph.graph);
                k1 = k1 || (code == "@" && w.k == 1 && r.condition == SlackCondition::isolated);
                p2 = p2 || (code == "A_" && w.k == 1 && r.condition == SlackCondition::degree_one);
            }
        }
    CHECK(k1);
    CHECK(p2);
}

TEST_CASE("tightness scans")
{
    auto rows = tightness_scan({graphs::copies(graphs::complete(3), 2), graphs::cycle(6)}, BoundSelector::eppstein);
    auto row = std::find_if(rows.begin(), rows.end(), [](const TightnessRow &r) { return r.k == 2; });
    REQUIRE(row != rows.end());
    CHECK(row->max_count == 9);
    CHECK(row->ratio == doctest::Approx(1.0));
    CHECK(row->argmax == to_graph6(graphs::copies(graphs::complete(3), 2)));

    auto both = tightness_scan(8, Filter::both, BoundSelector::four_power);
    auto two = std::find_if(both.begin(), both.end(), [](const TightnessRow &r) { return r.k == 2; });
    REQUIRE(two != both.end());
    CHECK(two->max_count == 6);
    CHECK(two->ratio == doctest::Approx(0.375));

    CHECK(log_bound(BoundSelector::four_power, 8, 2) == doctest::Approx(2 * std::log(4.0)));
    CHECK(parse_bound("four-power") == BoundSelector::four_power);
    CHECK_THROWS(parse_bound("moon"));
}

TEST_CASE("bipartite scan agrees with brute force")
{
    auto scan = mibs_scan(6, Filter::k4_free);
    std::uint64_t best = 0;
    for (auto &c : generate_all(6, Filter::k4_free))
        best = std::max(best, enumerate_mibs_bruteforce(c.graph).distinct_count);
    CHECK(scan.max_distinct == best);
    CHECK(scan.classes == generate_all(6, Filter::k4_free).size());
    CHECK(scan.ratio_twelve == doctest::Approx(static_cast<double>(best) / std::pow(12.0, 1.5)));
    CHECK(scan.ratio_twelve <= 1);
}

TEST_CASE("records roundtrip")
{
    auto c = canonical_form(graphs::cycle(5));
    auto rec = make_record(c, mis_profile(c.graph));
    auto line = record_to_line(rec);
    auto back = record_from_line(line);
    CHECK(back.graph6 == rec.graph6);
    CHECK(back.n == 5);
    CHECK(back.profile == rec.profile);
    CHECK(back.eppstein_slack == rec.eppstein_slack);
    CHECK(record_to_line(back) == line);
    CHECK_THROWS_AS(record_from_line("{\"graph6\":1}"), ParseError);
    CHECK_THROWS_AS(record_from_line("not json"), ParseError);

    auto path = std::filesystem::temp_directory_path() / "misbip_records_test.jsonl";
    {
        std::ofstream out{path};
        out << line << '\n' << record_to_line(make_record(canonical_form(graphs::path(3)), mis_profile(graphs::path(3)))) << '\n';
    }
    auto map = read_records(path.string());
    CHECK(map.size() == 2);
    CHECK(map.count(rec.graph6) == 1);
    std::filesystem::remove(path);
}

TEST_CASE("parallel_for visits every index once")
{
    for (int workers : {1, 3}) {
        std::vector<std::atomic<int>> hits(500);
        parallel_for(hits.size(), workers, [&](std::size_t i) { ++hits[i]; });
        CHECK(std::all_of(hits.begin(), hits.end(), [](auto &h) { return h.load() == 1; }));
    }
    CHECK_THROWS(parallel_for(10, 2, [](std::size_t i) {
        if (i == 7)
            throw std::runtime_error{"boom"};
    }));
}
