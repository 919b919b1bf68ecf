#include "oracles.hpp"

#include "misbip/bounds.hpp"
#include "misbip/corpus.hpp"
#include "misbip/errors.hpp"
#include "misbip/mis_enum.hpp"

#include <doctest.h>

#include <algorithm>

using namespace misbip;

namespace
{
    auto masks(const MisFamily &f) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> out;
        for (auto s : f.sets)
            out.push_back(s.bits());
        return out;
    }

    auto random_corpus(int count, int max_n, std::uint64_t salt) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        for (int i = 0; i < count; ++i) {
            const auto seed = salt + static_cast<std::uint64_t>(i);
            const int n = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(max_n));
            out.push_back(corpus::random_graph(n, 0.15 + 0.1 * static_cast<double>(seed % 7), seed));
        }
        return out;
    }
}

TEST_CASE("small families")
{
    auto k3 = enumerate_mis_bruteforce(graphs::complete(3));
    CHECK(k3.sets == std::vector{VertexSet::single(0), VertexSet::single(1), VertexSet::single(2)});

    auto c5 = enumerate_mis_bruteforce(graphs::cycle(5));
    CHECK(c5.sets.size() == 5);
    CHECK(std::all_of(c5.sets.begin(), c5.sets.end(), [](VertexSet s) { return s.size() == 2; }));

    CHECK(enumerate_mis_bruteforce(graphs::copies(graphs::complete(3), 2)).sets.size() == 9);

    auto k4 = enumerate_mis(graphs::complete(4));
    CHECK(k4.sets.size() == 4);
    CHECK(k4.profile.at(1) == 4);

    auto empty = enumerate_mis(Graph(0));
    CHECK(empty.sets == std::vector{VertexSet{}});

    auto diamond = enumerate_mis(graphs::diamond());
    CHECK(diamond.sets == std::vector{VertexSet::of({0, 1}), VertexSet::single(2), VertexSet::single(3)});
    CHECK(diamond.profile.counts == std::vector<std::uint64_t>{0, 2, 1, 0, 0});
}

TEST_CASE("profiles")
{
    CHECK(mis_profile(graphs::complete(4)).counts == std::vector<std::uint64_t>{0, 4, 0, 0, 0});
    CHECK(mis_profile(graphs::cycle(5)).counts == std::vector<std::uint64_t>{0, 0, 5, 0, 0, 0});
    auto p = mis_profile(graphs::disjoint_union(graphs::complete(3), graphs::complete(4)));
    CHECK(p.at(2) == 12);
    CHECK(p.total() == 12);
    CHECK(p.at_most(1) == 0);
    CHECK(p.at_most(100) == 12);
    CHECK(p.at(-1) == 0);
}

TEST_CASE("branching enumerator")
{
    auto k34 = enumerate_mis_branching(graphs::disjoint_union(graphs::complete(3), graphs::complete(4)), 2);
    CHECK(k34.family.sets.size() == 12);
    CHECK(Rational{k34.family.sets.size()} == *bounds::eppstein(7, 2).exact);
    CHECK(enumerate_mis_branching(graphs::complete(4), 0).family.sets.empty());
    auto c5 = enumerate_mis_branching(graphs::cycle(5), 2);
    CHECK(c5.family.sets == enumerate_mis_bruteforce(graphs::cycle(5)).sets);
    CHECK(c5.nodes >= c5.candidates);
    CHECK(c5.candidates >= 5);
}

TEST_CASE("brute force guard")
{
    CHECK_THROWS_AS(enumerate_mis_bruteforce(graphs::empty(21)), GuardError);
    CHECK_NOTHROW(enumerate_mis_bruteforce(graphs::empty(20)));
}

TEST_CASE("three enumerators agree with the definition")
{
    for (auto &g : random_corpus(250, 16, 9000)) {
        auto brute = enumerate_mis_bruteforce(g);
        auto pivot = enumerate_mis(g);
        auto branch = enumerate_mis_branching(g, g.order());
        CHECK(pivot.sets == brute.sets);
        CHECK(branch.family.sets == brute.sets);
        CHECK(pivot.profile == brute.profile);
        if (g.order() <= 10) {
            auto ref = oracle::maximal_independent_sets(g);
            std::sort(ref.begin(), ref.end());
            CHECK(masks(brute) == ref);
        }
        for (auto s : pivot.sets)
            CHECK((s | g.neighbours(s)) == g.vertices());
    }
}

TEST_CASE("branching with a budget returns the small sets only")
{
    for (auto &g : random_corpus(120, 14, 4000)) {
        auto all = enumerate_mis(g);
        for (int k = 0; k <= g.order(); k += 2) {
            std::vector<VertexSet> expect;
            for (auto s : all.sets)
                if (s.size() <= k)
                    expect.push_back(s);
            CHECK(enumerate_mis_branching(g, k).family.sets == expect);
        }
    }
}

TEST_CASE("restricted enumeration")
{
    auto g = graphs::cycle(6);
    std::vector<VertexSet> seen;
    for_each_mis(g, VertexSet::of({0, 1, 2}), [&](VertexSet s) { seen.push_back(s); });
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector{VertexSet::single(1), VertexSet::of({0, 2})});
}

TEST_CASE("disjoint unions multiply")
{
    auto graphs_ = random_corpus(60, 8, 777);
    for (std::size_t i = 0; i + 1 < graphs_.size(); i += 2) {
        auto &a = graphs_[i];
        auto &b = graphs_[i + 1];
        auto pa = mis_profile(a), pb = mis_profile(b);
        auto pu = mis_profile(graphs::disjoint_union(a, b));
        CHECK(pu.total() == pa.total() * pb.total());
        CHECK(pu == convolve(pa, pb));
    }
}

TEST_CASE("Moon-Moser, Eppstein and Nielsen inequalities on random graphs")
{
    int nielsen_violations = 0;
    for (auto &g : random_corpus(300, 16, 123)) {
        const int n = g.order();
        auto p = mis_profile(g);
        BigInt total{p.total()};
        CHECK(total * total * total <= pow_int(3, static_cast<unsigned long>(n)));
        for (int k = 0; k <= n; ++k) {
            CHECK(Rational{p.at_most(k)} <= *bounds::eppstein(n, k).exact);
            if (p.at(k) > 0 && Rational{p.at(k)} > *bounds::nielsen(n, k).exact)
                ++nielsen_violations;
        }
    }
    MESSAGE("Nielsen violations: " << nielsen_violations);
    WARN(nielsen_violations == 0);
}

TEST_CASE("Moon-Moser equality for disjoint triangles")
{
    for (int t = 0; t <= 6; ++t) {
        auto g = graphs::copies(graphs::complete(3), t);
        CHECK(BigInt{mis_profile(g).total()} == pow_int(3, static_cast<unsigned long>(t)));
        CHECK(Rational{mis_profile(g).total()} == *bounds::moon_moser(3 * t).exact);
    }
}
