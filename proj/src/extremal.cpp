#include "misbip/extremal.hpp"

#include "misbip/bounds.hpp"
#include "misbip/errors.hpp"
#include "misbip/graph_io.hpp"
#include "misbip/mibs_enum.hpp"
#include "misbip/numeric_format.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace misbip::extremal
{
    auto to_string(Filter f) -> std::string
    {
        switch (f) {
        case Filter::none: return "none";
        case Filter::k4_free: return "k4-free";
        case Filter::max_degree_3: return "maxdeg3";
        case Filter::both: return "both";
        }
        return "?";
    }

    auto parse_filter(const std::string &name) -> Filter
    {
        for (auto f : {Filter::none, Filter::k4_free, Filter::max_degree_3, Filter::both})
            if (to_string(f) == name)
                return f;
        throw std::invalid_argument{"unknown filter '" + name + "' (none, k4-free, maxdeg3, both)"};
    }

    auto passes(const Graph &g, Filter f) -> bool
    {
        const bool want_k4_free = f == Filter::k4_free || f == Filter::both;
        const bool want_cubic = f == Filter::max_degree_3 || f == Filter::both;
        if (want_cubic && degree_stats(g).max_degree > 3)
            return false;
        return ! want_k4_free || is_k4_free(g);
    }

    auto adjacency_key(const Graph &g) -> Key
    {
        Key key = 0;
        for (int j = 1; j < g.order(); ++j)
            for (int i = 0; i < j; ++i)
                key = key << 1 | (g.adjacent(i, j) ? 1 : 0);
        return key;
    }

    auto graph_from_key(int n, Key key) -> Graph
    {
        std::vector<Edge> edges;
        int bit = n * (n - 1) / 2;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (key >> --bit & 1)
                    edges.emplace_back(i, j);
        return Graph(n, edges);
    }

    namespace
    {
        struct Partial
        {
            std::array<std::int8_t, order_limit> order{};
            VertexSet used;
        };

        // Builds the ordering one position at a time, keeping only the partial orderings whose
        // columns so far are lexicographically smallest.
        auto minimise(const Graph &g) -> Key
        {
            const int n = g.order();
            if (n > order_limit)
                throw GuardError{"canonical form limited to " + std::to_string(order_limit) + " vertices, got " + std::to_string(n)};
            if (n <= 1)
                return 0;

            std::vector<Partial> level, next;
            for (int v = 0; v < n; ++v) {
                Partial p;
                p.order[0] = static_cast<std::int8_t>(v);
                p.used = VertexSet::single(v);
                level.push_back(p);
            }
            Key key = 0;
            for (int j = 1; j < n; ++j) {
                auto best = std::numeric_limits<Key>::max();
                next.clear();
                for (auto &p : level) {
                    for (int v : g.vertices() - p.used) {
                        Key column = 0;
                        for (int i = 0; i < j; ++i)
                            column = column << 1 | (g.adjacent(p.order[i], v) ? 1 : 0);
                        if (column < best) {
                            best = column;
                            next.clear();
                        }
                        if (column == best) {
                            auto q = p;
                            q.order[j] = static_cast<std::int8_t>(v);
                            q.used.insert(v);
                            next.push_back(q);
                        }
                    }
                }
                key = key << j | best;
                std::swap(level, next);
            }
            return key;
        }
    }

    auto canonical_key(const Graph &g) -> Key
    {
        thread_local std::unordered_map<Key, Key> memo;
        if (g.order() > order_limit)
            return minimise(g);
        const Key raw = adjacency_key(g) << 4 | static_cast<Key>(g.order());
        if (auto it = memo.find(raw); it != memo.end())
            return it->second;
        if (memo.size() > (1u << 20))
            memo.clear();
        return memo[raw] = minimise(g);
    }

    auto canonical_form(const Graph &g) -> CanonicalGraph
    {
        auto key = canonical_key(g);
        return {graph_from_key(g.order(), key), key};
    }

    void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)> &fn)
    {
        const auto threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, std::max<std::size_t>(count, 1));
        if (threads == 1) {
            for (std::size_t i = 0; i < count; ++i)
                fn(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                try {
                    for (auto i = next++; i < count; i = next++)
                        fn(i);
                } catch (...) {
                    std::lock_guard lock{failure_mutex};
                    if (! failure)
                        failure = std::current_exception();
                }
            });
        for (auto &th : pool)
            th.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    auto generate_all(int n, const std::function<bool(const Graph &)> &keep, int workers) -> std::vector<CanonicalGraph>
    {
        if (n < 0 || n > order_limit)
            throw GuardError{"generation limited to 0.." + std::to_string(order_limit) + " vertices, got " + std::to_string(n)};

        std::vector<Key> level;
        if (keep(Graph(0)))
            level.push_back(0);
        for (int m = 1; m <= n; ++m) {
            std::vector<std::vector<Key>> found(level.size());
            parallel_for(level.size(), workers, [&](std::size_t idx) {
                auto base = graph_from_key(m - 1, level[idx]);
                std::array<VertexSet, order_limit> rows{};
                auto &out = found[idx];
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                    VertexSet nb{mask};
                    for (int i = 0; i < m - 1; ++i) {
                        rows[i] = base.neighbours(i);
                        if (nb.contains(i))
                            rows[i].insert(m - 1);
                    }
                    rows[m - 1] = nb;
                    auto g = Graph::from_rows(std::span<const VertexSet>(rows.data(), m));
                    if (keep(g))
                        out.push_back(canonical_key(g));
                }
                std::sort(out.begin(), out.end());
                out.erase(std::unique(out.begin(), out.end()), out.end());
            });
            std::vector<Key> merged;
            for (auto &part : found)
                merged.insert(merged.end(), part.begin(), part.end());
            std::sort(merged.begin(), merged.end());
            merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
            level = std::move(merged);
        }

        std::vector<CanonicalGraph> out;
        out.reserve(level.size());
        for (auto key : level)
            out.push_back({graph_from_key(n, key), key});
        return out;
    }

    auto generate_all(int n, Filter filter, int workers) -> std::vector<CanonicalGraph>
    {
        return generate_all(n, [filter](const Graph &g) { return passes(g, filter); }, workers);
    }

    auto is_clique_union(const Graph &g, int k) -> bool
    {
        auto parts = components(g);
        if (static_cast<int>(parts.size()) != k)
            return false;
        return std::all_of(parts.begin(), parts.end(), [&](VertexSet c) {
            return (c.size() == 3 || c.size() == 4) && is_clique(g, c);
        });
    }

    namespace
    {
        auto profiles_of(const std::vector<CanonicalGraph> &classes, int workers) -> std::vector<SizeProfile>
        {
            std::vector<SizeProfile> out(classes.size());
            parallel_for(classes.size(), workers, [&](std::size_t i) { out[i] = mis_profile(classes[i].graph); });
            return out;
        }

        auto ratio_bucket(const Rational &ratio) -> std::size_t
        {
            if (ratio >= 1)
                return ratio == 1 ? 10 : 9;
            Rational scaled = ratio * 10;
            BigInt tenths = numerator(scaled) / denominator(scaled);
            return static_cast<std::size_t>(tenths);
        }
    }

    auto verify_theorem2(const std::vector<CanonicalGraph> &classes, const std::vector<SizeProfile> &profiles, int n)
        -> std::vector<ExtremalReport>
    {
        std::vector<ExtremalReport> reports;
        for (int k = 0; k <= n; ++k) {
            ExtremalReport r;
            r.n = n;
            r.k = k;
            r.bound = *bounds::eppstein(n, k).exact;
            r.classes = classes.size();
            for (std::size_t i = 0; i < classes.size(); ++i) {
                Rational count{profiles[i].at_most(k)};
                const bool equal = count == r.bound;
                if (count > r.bound)
                    r.violations.push_back(classes[i]);
                if (equal)
                    r.attainers.push_back(classes[i]);
                if (equal != is_clique_union(classes[i].graph, k))
                    r.structure_mismatches.push_back(classes[i]);
                ++r.slack_histogram[ratio_bucket(count / r.bound)];
            }
            reports.push_back(std::move(r));
        }
        return reports;
    }

    auto verify_theorem2(int n, int workers) -> std::vector<ExtremalReport>
    {
        auto classes = generate_all(n, Filter::none, workers);
        return verify_theorem2(classes, profiles_of(classes, workers), n);
    }

    auto to_string(SlackCondition c) -> std::string
    {
        switch (c) {
        case SlackCondition::degree_one: return "degree-one vertex";
        case SlackCondition::isolated: return "isolated vertex";
        case SlackCondition::long_cycle: return "cycle of length >= 4";
        }
        return "?";
    }

    auto slack_factor(SlackCondition c) -> Rational
    {
        switch (c) {
        case SlackCondition::degree_one: return Rational{8, 9};
        case SlackCondition::isolated: return Rational{16, 27};
        case SlackCondition::long_cycle: return Rational{11, 12};
        }
        return Rational{1};
    }

    auto has_condition(const Graph &g, SlackCondition c) -> bool
    {
        switch (c) {
        case SlackCondition::degree_one:
        case SlackCondition::isolated: {
            const int d = c == SlackCondition::isolated ? 0 : 1;
            for (int v : g.vertices())
                if (g.degree(v) == d)
                    return true;
            return false;
        }
        case SlackCondition::long_cycle:
            for (auto part : components(g)) {
                if (part.size() < 4)
                    continue;
                bool all_two = true;
                for (int v : part)
                    all_two = all_two && g.degree(v) == 2;
                if (all_two)
                    return true;
            }
            return false;
        }
        return false;
    }

    auto verify_degree2_constants(int n, int workers) -> std::vector<SlackReport>
    {
        auto classes = generate_all(n, [](const Graph &g) { return degree_stats(g).max_degree <= 2; }, workers);
        auto profiles = profiles_of(classes, workers);

        std::vector<SlackReport> reports;
        for (auto cond : {SlackCondition::degree_one, SlackCondition::isolated, SlackCondition::long_cycle}) {
            SlackReport r;
            r.condition = cond;
            r.factor = slack_factor(cond);
            for (std::size_t i = 0; i < classes.size(); ++i) {
                if (! has_condition(classes[i].graph, cond))
                    continue;
                ++r.classes;
                for (int k = 0; k <= n; ++k) {
                    ++r.pairs_checked;
                    auto limit = r.factor * *bounds::eppstein(n, k).exact;
                    Rational count{profiles[i].at_most(k)};
                    if (count > limit)
                        r.violations.push_back({classes[i], k});
                    else if (count == limit)
                        r.tight.push_back({classes[i], k});
                }
            }
            reports.push_back(std::move(r));
        }
        return reports;
    }

    auto to_string(BoundSelector b) -> std::string
    {
        switch (b) {
        case BoundSelector::eppstein: return "eppstein";
        case BoundSelector::nielsen: return "nielsen";
        case BoundSelector::corollary1: return "corollary1";
        case BoundSelector::four_power: return "four-power";
        }
        return "?";
    }

    auto parse_bound(const std::string &name) -> BoundSelector
    {
        for (auto b : {BoundSelector::eppstein, BoundSelector::nielsen, BoundSelector::corollary1, BoundSelector::four_power})
            if (to_string(b) == name)
                return b;
        throw std::invalid_argument{"unknown bound '" + name + "' (eppstein, nielsen, corollary1, four-power)"};
    }

    auto log_bound(BoundSelector b, int n, int k, double eta) -> long double
    {
        switch (b) {
        case BoundSelector::eppstein: return bounds::eppstein(n, k).log_value;
        case BoundSelector::nielsen: return bounds::nielsen(n, k).log_value;
        case BoundSelector::corollary1: return bounds::corollary1(n, k, eta).log_value;
        case BoundSelector::four_power: return n * std::log(4.0L) / 4;
        }
        return 0;
    }

    auto tightness_scan(const std::vector<Graph> &graphs, const std::vector<SizeProfile> &profiles, BoundSelector bound,
                        double eta) -> std::vector<TightnessRow>
    {
        std::map<std::pair<int, int>, TightnessRow> rows;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const int n = graphs[i].order();
            for (int k = 0; k <= n; ++k) {
                auto [it, fresh] = rows.try_emplace({n, k});
                auto &row = it->second;
                if (fresh) {
                    row.n = n;
                    row.k = k;
                    row.log_bound = log_bound(bound, n, k, eta);
                }
                auto c = profiles[i].at(k);
                if (c > row.max_count) {
                    row.max_count = c;
                    row.argmax = to_graph6(graphs[i]);
                }
            }
        }
        std::vector<TightnessRow> out;
        for (auto &[key, row] : rows) {
            row.ratio = row.max_count == 0 ? 0 : std::exp(std::log(static_cast<long double>(row.max_count)) - row.log_bound);
            out.push_back(row);
        }
        return out;
    }

    auto tightness_scan(const std::vector<Graph> &graphs, BoundSelector bound, double eta) -> std::vector<TightnessRow>
    {
        std::vector<SizeProfile> profiles;
        profiles.reserve(graphs.size());
        for (auto &g : graphs)
            profiles.push_back(mis_profile(g));
        return tightness_scan(graphs, profiles, bound, eta);
    }

    auto tightness_scan(int n, Filter filter, BoundSelector bound, double eta, int workers) -> std::vector<TightnessRow>
    {
        auto classes = generate_all(n, filter, workers);
        auto profiles = profiles_of(classes, workers);
        std::vector<Graph> graphs;
        for (auto &c : classes)
            graphs.push_back(c.graph);
        return tightness_scan(graphs, profiles, bound, eta);
    }

    auto mibs_scan(int n, Filter filter, int workers) -> MibsScan
    {
        auto classes = generate_all(n, filter, workers);
        std::vector<std::uint64_t> counts(classes.size());
        parallel_for(classes.size(), workers,
                     [&](std::size_t i) { counts[i] = enumerate_mibs_canonical(classes[i].graph).distinct_count; });

        MibsScan scan;
        scan.n = n;
        scan.classes = classes.size();
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (i == 0 || counts[i] > scan.max_distinct) {
                scan.max_distinct = counts[i];
                scan.argmax = to_graph6(classes[i].graph);
            }
        const auto quarter = n / 4.0L;
        const auto lm = std::log(static_cast<long double>(scan.max_distinct));
        scan.ratio_twelve = std::exp(lm - quarter * std::log(12.0L));
        scan.ratio_six = std::exp(lm - quarter * std::log(6.0L));
        return scan;
    }

    auto make_record(const CanonicalGraph &c, const SizeProfile &profile) -> ClassRecord
    {
        ClassRecord r;
        r.n = c.graph.order();
        r.graph6 = to_graph6(c.graph);
        r.profile = profile;
        for (int k = 0; k <= r.n; ++k) {
            Rational count{profile.at_most(k)};
            r.eppstein_slack.push_back(round_significant(static_cast<double>(to_long_double(count / *bounds::eppstein(r.n, k).exact))));
            r.nielsen_slack.push_back(round_significant(static_cast<double>(to_long_double(count / *bounds::nielsen(r.n, k).exact))));
        }
        return r;
    }

    auto record_to_line(const ClassRecord &r) -> std::string
    {
        nlohmann::json j;
        j["graph6"] = r.graph6;
        j["n"] = r.n;
        j["profile"] = r.profile.counts;
        j["slack"] = {{"eppstein", r.eppstein_slack}, {"nielsen", r.nielsen_slack}};
        return j.dump();
    }

    auto record_from_line(const std::string &line) -> ClassRecord
    {
        try {
            auto j = nlohmann::json::parse(line);
            ClassRecord r;
            r.graph6 = j.at("graph6").get<std::string>();
            r.n = j.at("n").get<int>();
            r.profile.counts = j.at("profile").get<std::vector<std::uint64_t>>();
            r.eppstein_slack = j.at("slack").at("eppstein").get<std::vector<double>>();
            r.nielsen_slack = j.at("slack").at("nielsen").get<std::vector<double>>();
            if (parse_graph6(r.graph6).order() != r.n || static_cast<int>(r.profile.counts.size()) != r.n + 1)
                throw ParseError{"inconsistent record for " + r.graph6};
            return r;
        } catch (const nlohmann::json::exception &e) {
            throw ParseError{std::string{"bad record: "} + e.what()};
        }
    }

    auto read_records(const std::string &path) -> std::map<std::string, ClassRecord>
    {
        std::map<std::string, ClassRecord> out;
        std::ifstream in{path};
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            auto r = record_from_line(line);
            out.emplace(r.graph6, std::move(r));
        }
        return out;
    }
}
