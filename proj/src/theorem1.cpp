#include "misbip/theorem1.hpp"

#include "misbip/errors.hpp"
#include "misbip/mis_enum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace misbip::theorem1
{
    using misbip::to_string;

    namespace
    {
        auto inequality(std::string name, long lhs, const char *op, long rhs, bool holds) -> Check
        {
            std::ostringstream d;
            d << lhs << ' ' << op << ' ' << rhs;
            return {std::move(name), holds, d.str()};
        }

        auto le(std::string name, long lhs, long rhs) -> Check
        {
            return inequality(std::move(name), lhs, "<=", rhs, lhs <= rhs);
        }

        auto count_in(const Graph &g, int v, VertexSet s) -> int
        {
            return (g.neighbours(v) & s).size();
        }

        auto cell_of(const Decomposition &dec, int v) -> int
        {
            for (std::size_t i = 0; i < dec.cells.size(); ++i)
                if (dec.cells[i].vertices.contains(v))
                    return static_cast<int>(i);
            return -1;
        }

        /// Cells whose vertices lie in `vertices`.
        auto cells_touching(const Decomposition &dec, VertexSet vertices) -> CellSet
        {
            CellSet result;
            for (std::size_t i = 0; i < dec.cells.size(); ++i)
                if (dec.cells[i].vertices.intersects(vertices))
                    result.insert(static_cast<int>(i));
            return result;
        }

        auto quarter_power(int e) -> Rational
        {
            return power_product({{3, e}, {4, -e}});
        }

        /// T fails goodness on cell i: T picks v in {x, y} and misses N(v').
        auto is_bad_on(const Graph &g, const Cell &c, VertexSet t) -> bool
        {
            if (t.contains(c.x))
                return ! t.intersects(g.neighbours(c.y));
            if (t.contains(c.y))
                return ! t.intersects(g.neighbours(c.x));
            return false;
        }

        auto is_good(const Graph &g, const Decomposition &dec, CellSet scope, VertexSet t) -> bool
        {
            for (int i : scope)
                if (is_bad_on(g, dec.cells[i], t))
                    return false;
            return true;
        }

        auto cell_vertex(const Cell &c, int choice) -> int
        {
            switch (choice) {
            case 0: return c.u;
            case 1: return c.x;
            case 2: return c.y;
            default: return c.z;
            }
        }
    }

    auto all_passed(const std::vector<Check> &checks) -> bool
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed || ! c.asserted; });
    }

    auto to_string(BadCase c) -> std::string
    {
        switch (c) {
        case BadCase::no_outside_neighbour: return "d=0";
        case BadCase::one_outside_neighbour: return "d=1";
        case BadCase::two_in_same_cell: return "d=2 same cell";
        case BadCase::two_in_distinct_cells: return "d=2 distinct cells";
        }
        return "?";
    }

    auto decompose(const Graph &g, VertexSet i0, J2Rule rule) -> Decomposition
    {
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) > 3)
                throw PreconditionError{"decompose: vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v))};
        if (auto k4 = find_k4(g))
            throw PreconditionError{"decompose: graph contains K4 " + misbip::to_string(*k4)};
        if (! i0.subset_of(g.vertices()))
            throw PreconditionError{"decompose: I0 " + misbip::to_string(i0) + " has vertices outside the graph"};
        for (int v : i0)
            if (g.neighbours(v).intersects(i0))
                throw PreconditionError{"decompose: I0 is not independent, edge at vertex " + std::to_string(v)};
        auto undominated = g.vertices() - i0 - g.neighbours(i0);
        if (! undominated.empty())
            throw PreconditionError{"decompose: I0 is not maximal, vertex " + std::to_string(undominated.first()) + " is undominated"};

        Decomposition dec;
        dec.rule = rule;
        dec.n = g.order();
        dec.k = i0.size();
        dec.i0 = i0;
        dec.j0 = g.vertices() - i0;
        for (int v : dec.i0)
            if (count_in(g, v, dec.j0) <= 2)
                dec.i1.insert(v);
        for (int v : dec.j0)
            if (g.neighbours(v).intersects(dec.i1))
                dec.j1.insert(v);
        auto j2_pool = rule == J2Rule::excluding_j1 ? dec.j0 - dec.j1 : dec.j0;
        for (int v : j2_pool)
            if (count_in(g, v, dec.i0) >= 2)
                dec.j2.insert(v);
        auto i2_pool = rule == J2Rule::excluding_j1 ? dec.i0 : dec.i0 - dec.i1;
        for (int v : i2_pool)
            if (g.neighbours(v).intersects(dec.j2))
                dec.i2.insert(v);
        dec.i3 = dec.i0 - dec.i1 - dec.i2;
        dec.ell = dec.i3.size();
        for (int v : dec.i0)
            dec.edge_count_i0_j0 += count_in(g, v, dec.j0);
        dec.cells = label_cells(g, dec);
        return dec;
    }

    auto label_cells(const Graph &g, const Decomposition &dec) -> std::vector<Cell>
    {
        std::vector<Cell> cells;
        for (int u : dec.i3) {
            auto nb = g.neighbours(u).to_vector();
            if (nb.size() != 3)
                throw PreconditionError{"label_cells: vertex " + std::to_string(u) + " of I3 does not have degree 3"};
            static constexpr int pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
            bool labelled = false;
            for (auto &p : pairs)
                if (! g.adjacent(nb[p[0]], nb[p[1]])) {
                    cells.push_back({u, nb[p[0]], nb[p[1]], nb[p[2]], g.closed_neighbours(u)});
                    labelled = true;
                    break;
                }
            if (! labelled)
                throw PreconditionError{"label_cells: closed neighbourhood of " + std::to_string(u) + " is a K4"};
        }
        return cells;
    }

    auto decomposition_checks(const Graph &g, const Decomposition &dec) -> std::vector<Check>
    {
        const long n = dec.n, k = dec.k;
        const long i1 = dec.i1.size(), j1 = dec.j1.size(), j2 = dec.j2.size(), i2 = dec.i2.size();
        std::vector<Check> checks;
        checks.push_back(le("edges_at_least_n_minus_k_plus_j2", n - k + j2, dec.edge_count_i0_j0));
        checks.push_back(le("edges_at_most_3k_minus_i1", dec.edge_count_i0_j0, 3 * k - i1));
        checks.push_back(le("i1_plus_j2_at_most_4k_minus_n", i1 + j2, 4 * k - n));
        checks.push_back(le("j1_plus_j2_at_most_2i1_plus_j2", j1 + j2, 2 * i1 + j2));
        checks.push_back(le("j1_plus_j2_at_most_2(4k_minus_n)", j1 + j2, 2 * (4 * k - n)));
        checks.push_back(le("j1_at_most_2i1", j1, 2 * i1));
        checks.push_back(le("i2_at_most_3j2", i2, 3 * j2));
        checks.push_back({"i1_i2_disjoint", ! dec.i1.intersects(dec.i2), misbip::to_string(dec.i1 & dec.i2)});
        checks.push_back(le("ell_at_least_k_minus_i1_minus_3j2", k - i1 - 3 * j2, dec.ell));
        checks.push_back(le("ell_at_least_k_minus_3(4k_minus_n)", k - 3 * (4 * k - n), dec.ell));

        bool closed = true, nonadjacent = true, disjoint = true, unique = true;
        VertexSet covered;
        for (auto &c : dec.cells) {
            closed = closed && g.closed_neighbours(c.u) == c.vertices && c.vertices.size() == 4;
            nonadjacent = nonadjacent && ! g.adjacent(c.x, c.y);
            disjoint = disjoint && ! covered.intersects(c.vertices);
            covered |= c.vertices;
            for (int w : {c.x, c.y, c.z})
                unique = unique && (g.neighbours(w) & dec.i0) == VertexSet::single(c.u);
        }
        checks.push_back({"cells_are_closed_neighbourhoods", closed, ""});
        checks.push_back({"cell_x_y_nonadjacent", nonadjacent, ""});
        checks.push_back({"cells_disjoint", disjoint, ""});
        checks.push_back({"cell_neighbours_have_unique_i0_neighbour", unique, ""});
        return checks;
    }

    auto select(const Graph &g, const Decomposition &dec, CellSet s) -> SelectionState
    {
        const int ell = dec.ell;
        if (! s.subset_of(VertexSet::universe(ell)))
            throw PreconditionError{"select: S " + misbip::to_string(s) + " is not a subset of the " + std::to_string(ell) + " cells"};

        SelectionState st;
        st.s = s;
        st.i4 = VertexSet::universe(ell) - s;
        for (int i : st.i4)
            st.u |= dec.cells[i].vertices;
        for (int i : st.i4) {
            auto &c = dec.cells[i];
            if (g.neighbours(c.x).subset_of(st.u) && g.neighbours(c.y).subset_of(st.u))
                st.i5.insert(i);
        }

        std::vector<Edge> cell_edges;
        for (int i : st.i4)
            for (int j : st.i4)
                if (i < j && g.neighbours(dec.cells[i].vertices).intersects(dec.cells[j].vertices))
                    cell_edges.emplace_back(i, j);
        st.cell_graph = Graph(ell, cell_edges);
        st.h = induced(st.cell_graph, st.i5);
        st.h_max_degree = degree_stats(st.h.graph).max_degree;

        auto remaining = st.i5;
        while (! remaining.empty()) {
            int c = remaining.first();
            st.i6.insert(c);
            auto ball = st.cell_graph.closed_neighbours(c);
            ball |= st.cell_graph.neighbours(ball);
            remaining -= ball;
        }
        return st;
    }

    auto selection_checks(const Graph &g, const Decomposition &dec, const SelectionState &st) -> std::vector<Check>
    {
        std::vector<Check> checks;
        checks.push_back(le("h_max_degree_at_most_6", st.h_max_degree, 6));

        bool square_independent = true;
        const auto &h = st.h.graph;
        for (int a = 0; a < h.order(); ++a) {
            if (! st.i6.contains(st.h.to_original[a]))
                continue;
            auto within2 = h.closed_neighbours(a);
            within2 |= h.neighbours(within2);
            for (int b : within2)
                if (b != a && st.i6.contains(st.h.to_original[b]))
                    square_independent = false;
        }
        checks.push_back({"i6_independent_in_square_of_h", square_independent, misbip::to_string(st.i6)});
        checks.push_back(le("i5_at_most_37_i6", st.i5.size(), 37L * st.i6.size()));
        checks.push_back({"i6_subset_of_i5_subset_of_i4", st.i6.subset_of(st.i5) && st.i5.subset_of(st.i4), ""});
        checks.push_back(le("i4_equals_ell_minus_s", dec.ell - st.s.size(), st.i4.size()));

        const long i4 = st.i4.size(), s = st.s.size(), j1 = dec.j1.size(), j2 = dec.j2.size();
        auto ef = le("i5_at_least_i4_minus_6s_minus_2j1_minus_j2", i4 - 6 * s - 2 * j1 - j2, st.i5.size());
        // J0 vertices whose only I0-neighbour is in I2 also reach U and are not charged here
        ef.asserted = false;
        checks.push_back(ef);

        VertexSet in_cells;
        for (auto &c : dec.cells)
            in_cells |= c.vertices;
        const long j3 = (dec.j0 - dec.j1 - dec.j2 - in_cells).size();
        checks.push_back(le("i5_at_least_i4_minus_6s_minus_2j1_minus_j2_minus_2j3", i4 - 6 * s - 2 * j1 - j2 - 2 * j3, st.i5.size()));
        (void)g;
        return checks;
    }

    auto bad_event_probability(const Graph &g, const Decomposition &dec, const SelectionState &st, int cell, int v)
        -> BadEvent
    {
        if (cell < 0 || cell >= dec.ell || ! st.i5.contains(cell))
            throw PreconditionError{"bad_event_probability: cell " + std::to_string(cell) + " is not in I5"};
        const auto &c = dec.cells[cell];
        if (v != c.x && v != c.y)
            throw PreconditionError{"bad_event_probability: vertex " + std::to_string(v) + " is neither x nor y of its cell"};
        const int other = v == c.x ? c.y : c.x;

        auto outside = g.neighbours(other) - c.vertices;
        std::map<int, int> per_cell;
        for (int w : outside) {
            int owner = cell_of(dec, w);
            if (owner < 0 || ! st.i4.contains(owner))
                throw PreconditionError{"bad_event_probability: neighbour " + std::to_string(w) + " lies outside U"};
            ++per_cell[owner];
        }

        Rational q{1, 4};
        for (auto [owner, hits] : per_cell)
            q *= Rational{4 - hits, 4};

        BadCase kind = BadCase::no_outside_neighbour;
        if (outside.size() == 1)
            kind = BadCase::one_outside_neighbour;
        else if (outside.size() == 2)
            kind = per_cell.size() == 1 ? BadCase::two_in_same_cell : BadCase::two_in_distinct_cells;
        return {q, kind};
    }

    auto cell_bad_probability(const Graph &g, const Decomposition &dec, const SelectionState &st, int cell) -> Rational
    {
        const auto &c = dec.cells.at(cell);
        return bad_event_probability(g, dec, st, cell, c.x).q + bad_event_probability(g, dec, st, cell, c.y).q;
    }

    auto transversal_census(const Graph &g, const Decomposition &dec, const SelectionState &st) -> TransversalStats
    {
        const auto cells = st.i4.to_vector();
        const int m = static_cast<int>(cells.size());
        if (2 * m > 22)
            throw GuardError{"transversal census: 4^" + std::to_string(m) + " transversals exceed 2^22; use the Monte-Carlo estimate"};

        TransversalStats stats;
        stats.total = std::uint64_t{1} << (2 * m);
        std::vector<std::uint64_t> bad(static_cast<std::size_t>(dec.ell), 0);

        for (std::uint64_t code = 0; code < stats.total; ++code) {
            VertexSet t;
            for (int j = 0; j < m; ++j)
                t.insert(cell_vertex(dec.cells[cells[j]], static_cast<int>((code >> (2 * j)) & 3U)));
            bool good = true, good_all = true;
            for (int i : cells)
                if (is_bad_on(g, dec.cells[i], t)) {
                    good_all = false;
                    if (st.i5.contains(i)) {
                        good = false;
                        ++bad[i];
                    }
                }
            stats.good_count += good;
            stats.good_count_all_cells += good_all;
        }

        stats.p_good = Rational{stats.good_count, stats.total};
        stats.p_good_all_cells = Rational{stats.good_count_all_cells, stats.total};
        stats.product_bound = 1;
        for (int i : st.i5) {
            stats.per_cell_bad_prob[i] = cell_bad_probability(g, dec, st, i);
            stats.per_cell_bad_prob_exhaustive[i] = Rational{bad[i], stats.total};
            if (st.i6.contains(i))
                stats.product_bound *= 1 - stats.per_cell_bad_prob[i];
        }
        return stats;
    }

    auto transversal_estimate(const Graph &g, const Decomposition &dec, const SelectionState &st,
        std::uint64_t samples, std::uint64_t seed) -> MonteCarloEstimate
    {
        std::mt19937_64 rng{seed};
        const auto cells = st.i4.to_vector();
        std::uint64_t good = 0;
        for (std::uint64_t s = 0; s < samples; ++s) {
            VertexSet t;
            for (int i : cells)
                t.insert(cell_vertex(dec.cells[i], static_cast<int>(rng() >> 62)));
            good += is_good(g, dec, st.i5, t);
        }
        MonteCarloEstimate est;
        est.samples = samples;
        if (samples == 0)
            return est;
        est.p_good = static_cast<double>(good) / static_cast<double>(samples);
        double half = 1.96 * std::sqrt(est.p_good * (1 - est.p_good) / static_cast<double>(samples));
        est.ci_low = std::max(0.0, est.p_good - half);
        est.ci_high = std::min(1.0, est.p_good + half);
        return est;
    }

    auto verify_product_bound(const Graph &g, const Decomposition &dec, const SelectionState &st,
        const TransversalStats &stats) -> std::vector<Check>
    {
        std::vector<Check> checks;
        auto three_quarters = quarter_power(st.i6.size());
        checks.push_back({"p_good_at_most_product", stats.p_good <= stats.product_bound,
            to_string(stats.p_good) + " <= " + to_string(stats.product_bound)});
        checks.push_back({"product_at_most_three_quarters_power", stats.product_bound <= three_quarters,
            to_string(stats.product_bound) + " <= " + to_string(three_quarters)});

        bool quarter = true, matches = true;
        std::string worst;
        for (auto &[i, p] : stats.per_cell_bad_prob) {
            quarter = quarter && p >= Rational{1, 4};
            matches = matches && p == stats.per_cell_bad_prob_exhaustive.at(i);
            if (! (p >= Rational{1, 4}))
                worst = "cell " + std::to_string(i) + ": " + to_string(p);
        }
        checks.push_back({"cell_bad_probability_at_least_quarter", quarter, worst});
        checks.push_back({"case_analysis_matches_exhaustive", matches, ""});

        // B_i is determined by T on the cells meeting N[x_i] ∪ N[y_i]
        bool disjoint = true;
        CellSet seen;
        for (int i : st.i6) {
            auto &c = dec.cells[i];
            auto touched = cells_touching(dec, g.closed_neighbours(c.x) | g.closed_neighbours(c.y));
            disjoint = disjoint && ! touched.intersects(seen);
            seen |= touched;
        }
        checks.push_back({"i6_events_touch_disjoint_cells", disjoint, ""});

        if (st.cell_graph.edge_count() == 0) {
            Rational independent = 1;
            for (auto &[i, p] : stats.per_cell_bad_prob)
                independent *= 1 - p;
            checks.push_back({"independent_cells_census_equals_product", stats.p_good == independent,
                to_string(stats.p_good) + " == " + to_string(independent)});
        }
        return checks;
    }

    auto CaptureReport::passed() const -> bool
    {
        return std::all_of(families.begin(), families.end(), [](const CaptureFamily &f) { return all_passed(f.checks); });
    }

    auto verify_is_capture(const Graph &g, const Decomposition &dec, int k) -> CaptureReport
    {
        CaptureReport report;
        report.k = k;
        std::map<CellSet, std::vector<VertexSet>> by_s;
        for_each_mis(g, [&](VertexSet set) {
            if (set.size() != k)
                return;
            ++report.sets_of_size_k;
            CellSet s;
            for (int i = 0; i < dec.ell; ++i)
                if ((set & dec.cells[i].vertices).size() >= 2)
                    s.insert(i);
            by_s[s].push_back(set);
        });

        for (auto &[s, family] : by_s) {
            CaptureFamily f;
            f.s = s;
            f.size = family.size();
            auto st = select(g, dec, s);
            f.outside_u = (g.vertices() - st.u).size();

            bool hit = true, transversal = true, good = true;
            for (auto set : family) {
                auto t = set & st.u;
                for (auto &c : dec.cells)
                    hit = hit && set.intersects(c.vertices);
                for (int i : st.i4)
                    transversal = transversal && (t & dec.cells[i].vertices).size() == 1;
                good = good && is_good(g, dec, st.i5, t);
                if (! is_good(g, dec, st.i4, t))
                    ++f.transversal_misses_all_cells;
            }
            f.checks.push_back({"every_cell_hit", hit, ""});
            f.checks.push_back(le("ell_plus_s_at_most_k", dec.ell + s.size(), k));
            f.checks.push_back({"intersection_with_u_is_transversal", transversal, ""});
            f.checks.push_back({"intersection_with_u_is_good", good, ""});
            f.checks.push_back({"intersection_good_on_all_i4_cells", f.transversal_misses_all_cells == 0,
                std::to_string(f.transversal_misses_all_cells) + " of " + std::to_string(f.size) + " sets miss", false});

            if (2 * st.i4.size() <= 22) {
                auto stats = transversal_census(g, dec, st);
                f.good_count = stats.good_count;
                BigInt envelope = BigInt{stats.good_count} << f.outside_u;
                f.checks.push_back({"family_at_most_good_times_2_pow_outside", BigInt{f.size} <= envelope,
                    std::to_string(f.size) + " <= " + envelope.str()});
            }
            else
                f.checks.push_back({"family_at_most_good_times_2_pow_outside", false, "census infeasible", false});
            report.families.push_back(std::move(f));
        }
        return report;
    }

    auto minimum_maximal_independent_set(const Graph &g) -> VertexSet
    {
        std::optional<VertexSet> best;
        for_each_mis(g, [&](VertexSet s) {
            if (! best || s.size() < best->size() || (s.size() == best->size() && lexicographically_less(s, *best)))
                best = s;
        });
        return *best;
    }

    auto PipelineReport::passed() const -> bool
    {
        return all_passed(checks) && (! capture || capture->passed());
    }

    auto run_pipeline(const Graph &g, const PipelineOptions &options) -> PipelineReport
    {
        PipelineReport report;
        auto i0 = options.i0 ? *options.i0 : minimum_maximal_independent_set(g);
        report.decomposition = decompose(g, i0, options.rule);
        const auto &dec = report.decomposition;
        report.checks = decomposition_checks(g, dec);

        report.state = select(g, dec, options.s);
        for (auto &c : selection_checks(g, dec, report.state))
            report.checks.push_back(std::move(c));

        if (2 * report.state.i4.size() <= 22) {
            report.census = transversal_census(g, dec, report.state);
            for (auto &c : verify_product_bound(g, dec, report.state, *report.census))
                report.checks.push_back(std::move(c));
        }
        else
            report.estimate = transversal_estimate(g, dec, report.state, options.monte_carlo_samples, options.seed);

        if (options.capture)
            report.capture = verify_is_capture(g, dec, options.capture_k.value_or(dec.k));
        return report;
    }
}
