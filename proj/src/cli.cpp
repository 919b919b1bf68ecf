#include "misbip/cli.hpp"

#include "misbip/bounds.hpp"
#include "misbip/errors.hpp"
#include "misbip/graph_io.hpp"
#include "misbip/mibs_enum.hpp"
#include "misbip/mis_enum.hpp"
#include "misbip/numeric_format.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace misbip::cli
{
    using namespace misbip::theorem1;

    auto dump(const Json &j) -> std::string { return j.dump(); }

    auto number(long double x) -> Json
    {
        if (! std::isfinite(x))
            return nullptr;
        return round_significant(static_cast<double>(x));
    }

    auto rational(const Rational &r) -> Json
    {
        return {{"exact", misbip::to_string(r)}, {"value", number(to_long_double(r))}};
    }

    auto parse_index_list(const std::string &text) -> VertexSet
    {
        VertexSet out;
        std::stringstream in{text};
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.find_first_not_of(' ') == std::string::npos)
                continue;
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(item, &used);
            } catch (const std::exception &) {
                throw ParseError{"bad index '" + item + "'"};
            }
            if (item.find_first_not_of(' ', used) != std::string::npos || v < 0 || v >= max_order)
                throw ParseError{"bad index '" + item + "'"};
            out.insert(v);
        }
        return out;
    }

    namespace
    {
        auto indices(VertexSet s) -> Json { return s.to_vector(); }

        auto bound_json(const bounds::ExactBound &b) -> Json
        {
            Json j{{"log", number(b.log_value)}, {"value", number(b.value())}};
            if (b.exact)
                j["exact"] = misbip::to_string(*b.exact);
            return j;
        }

        auto checks_json(const std::vector<Check> &checks) -> Json
        {
            Json out = Json::array();
            for (auto &c : checks)
                out.push_back({{"name", c.name}, {"passed", c.passed}, {"asserted", c.asserted}, {"detail", c.detail}});
            return out;
        }
    }

    auto cmd_mis(const Graph &g, std::optional<int> k, double eta) -> Json
    {
        auto profile = mis_profile(g);
        const int n = g.order();
        Json j{{"graph6", to_graph6(g)}, {"n", n}, {"mis", profile.total()}, {"profile", profile.counts}};
        j["moon_moser"] = bound_json(bounds::moon_moser(n));
        j["moon_moser"]["holds"] = std::log(static_cast<long double>(profile.total())) <= bounds::moon_moser(n).log_value + bounds::log_tolerance;
        if (k) {
            Json c{{"k", *k}, {"mis_k", profile.at(*k)}, {"mis_le_k", profile.at_most(*k)}};
            const Rational le{profile.at_most(*k)};
            auto epp = bounds::eppstein(n, *k);
            auto nie = bounds::nielsen(n, *k);
            c["eppstein"] = bound_json(epp);
            c["eppstein"]["holds"] = le <= *epp.exact;
            c["eppstein"]["equality"] = le == *epp.exact;
            c["nielsen"] = bound_json(nie);
            c["nielsen"]["holds"] = le <= *nie.exact;
            auto cor = bounds::corollary1(n, *k, eta);
            c["corollary1"] = bound_json(cor);
            c["corollary1"]["eta"] = number(eta);
            c["corollary1"]["holds"] = profile.at_most(*k) == 0 ||
                std::log(static_cast<long double>(profile.at_most(*k))) <= cor.log_value * (1 + bounds::log_tolerance) + bounds::log_tolerance;
            j["bounds"] = c;
        }
        return j;
    }

    auto mis_csv(const Graph &g) -> std::string
    {
        auto profile = mis_profile(g);
        std::string out = "graph6,k,count\n";
        const auto name = to_graph6(g);
        for (std::size_t k = 0; k < profile.counts.size(); ++k)
            out += name + "," + std::to_string(k) + "," + std::to_string(profile.counts[k]) + "\n";
        return out;
    }

    auto cmd_mibs(const Graph &g, bool list) -> Json
    {
        auto census = enumerate_mibs_canonical(g);
        Json j{
            {"graph6", to_graph6(g)},
            {"n", g.order()},
            {"distinct", census.distinct_count},
            {"ordered_pairs", census.ordered_pair_count},
            {"generated_pairs", census.generated_pairs},
            {"non_maximal_candidates", census.non_maximal_candidates},
            {"a_size_histogram", census.a_size_histogram},
            {"twelve_power", number(std::pow(12.0L, g.order() / 4.0L))},
        };
        if (list) {
            Json records = Json::array();
            for (auto &r : census.records) {
                Json w = Json::array();
                for (auto &p : r.witnesses)
                    w.push_back({{"A", indices(p.a)}, {"B", indices(p.b)}});
                records.push_back({{"vertices", indices(r.vertices)}, {"witnesses", w}});
            }
            j["records"] = records;
        }
        return j;
    }

    auto cmd_bounds(int n, int k, double eta) -> Json
    {
        if (n < 0 || k < 0)
            throw PreconditionError{"bounds: n and k must be non-negative"};
        auto cor = bounds::corollary1(n, k, eta);
        Json j{
            {"n", n},
            {"k", k},
            {"eta", number(eta)},
            {"moon_moser", bound_json(bounds::moon_moser(n))},
            {"eppstein", bound_json(bounds::eppstein(n, k))},
            {"nielsen", bound_json(bounds::nielsen(n, k))},
            {"corollary1", bound_json(cor)},
        };
        auto id = bounds::corollary1_induction_identity(n, k, eta);
        j["corollary1_induction_residual"] = number(id.relative_residual);
        return j;
    }

    auto bounds_csv(const Json &report) -> std::string
    {
        std::string out = "bound,value,log\n";
        for (auto name : {"moon_moser", "eppstein", "nielsen", "corollary1"}) {
            auto &b = report.at(name);
            out += std::string{name} + "," + b.at("value").dump() + "," + b.at("log").dump() + "\n";
        }
        return out;
    }

    auto cmd_curves(double eta, int points) -> Json
    {
        Json rows = Json::array();
        for (auto &r : bounds::curve_table(points, eta))
            rows.push_back({{"x", number(r.x)},
                            {"eppstein", number(r.eppstein)},
                            {"nielsen", number(r.nielsen)},
                            {"interp", number(r.interpolation)},
                            {"corollary1_eta", number(r.corollary1)}});
        return {{"eta", number(eta)}, {"rows", rows}};
    }

    auto cmd_solve(long double margin) -> Json
    {
        auto w = bounds::solve_witnesses(margin);
        auto mono = bounds::monotonicity_conditions(static_cast<double>(w.eta));
        return {
            {"label", "admissible witness"},
            {"margin", number(margin)},
            {"f_at_zero", number(bounds::theorem1_exponent(0))},
            {"eps", number(w.eps_delta.eps)},
            {"f_at_eps", number(w.eps_delta.f_at_eps)},
            {"delta", number(w.eps_delta.delta)},
            {"eta", number(w.eta)},
            {"xi", number(w.xi)},
            {"nu", number(w.nu)},
            {"first_sum_exponent", number(w.first_sum_exponent)},
            {"second_sum_exponent", number(w.second_sum_exponent)},
            {"quarter_log_twelve", number(std::log(12.0L) / 4)},
            {"c1", number(mono.c1)},
            {"c2", number(mono.c2)},
        };
    }

    auto cmd_pipeline(const Graph &g, const PipelineOptions &options) -> Json
    {
        auto report = run_pipeline(g, options);
        const auto &dec = report.decomposition;
        const auto &st = report.state;

        Json j{{"graph6", to_graph6(g)}, {"n", dec.n}, {"k", dec.k}, {"ell", dec.ell}};
        j["rule"] = dec.rule == J2Rule::all_shared ? "all-shared" : "excluding-j1";
        j["sets"] = {{"I0", indices(dec.i0)}, {"J0", indices(dec.j0)}, {"I1", indices(dec.i1)}, {"J1", indices(dec.j1)},
                     {"J2", indices(dec.j2)}, {"I2", indices(dec.i2)}, {"I3", indices(dec.i3)}};
        Json cells = Json::array();
        for (std::size_t i = 0; i < dec.cells.size(); ++i) {
            auto &c = dec.cells[i];
            cells.push_back({{"index", i}, {"u", c.u}, {"x", c.x}, {"y", c.y}, {"z", c.z}});
        }
        j["cells"] = cells;
        j["selection"] = {{"S", indices(st.s)}, {"I4", indices(st.i4)}, {"I5", indices(st.i5)}, {"I6", indices(st.i6)},
                          {"U", indices(st.u)}, {"h_max_degree", st.h_max_degree}};
        j["checks"] = checks_json(report.checks);

        Json notes = Json::array();
        if (report.census) {
            auto &c = *report.census;
            Json per_cell = Json::array();
            bool saw_one_outside = false;
            for (auto &[cell, q] : c.per_cell_bad_prob) {
                Json cases = Json::array();
                for (int v : {dec.cells[cell].x, dec.cells[cell].y}) {
                    auto e = bad_event_probability(g, dec, st, cell, v);
                    saw_one_outside = saw_one_outside || e.kind == BadCase::one_outside_neighbour;
                    cases.push_back({{"vertex", v}, {"case", to_string(e.kind)}, {"q", misbip::to_string(e.q)}});
                }
                per_cell.push_back({{"cell", cell},
                                    {"bad", rational(q)},
                                    {"bad_exhaustive", rational(c.per_cell_bad_prob_exhaustive.at(cell))},
                                    {"cases", cases}});
            }
            j["census"] = {
                {"total", c.total},
                {"good", c.good_count},
                {"good_all_cells", c.good_count_all_cells},
                {"p_good", rational(c.p_good)},
                {"p_good_all_cells", rational(c.p_good_all_cells)},
                {"product_bound", rational(c.product_bound)},
                {"three_quarters_power", rational(power_product({{3, st.i6.size()}, {4, -static_cast<long>(st.i6.size())}}))},
                {"per_cell", per_cell},
            };
            if (saw_one_outside)
                notes.push_back("one-outside-neighbour case: probability is 1/4 * 3/4 = 3/16");
        }
        if (report.estimate) {
            auto &e = *report.estimate;
            j["estimate"] = {{"samples", e.samples}, {"p_good", number(e.p_good)}, {"ci_low", number(e.ci_low)}, {"ci_high", number(e.ci_high)}};
            notes.push_back("transversal census skipped: 4^|I4| above " + std::to_string(census_limit) + ", Monte Carlo estimate reported");
        }
        if (report.capture) {
            auto &cap = *report.capture;
            Json fams = Json::array();
            for (auto &f : cap.families)
                fams.push_back({{"S", indices(f.s)},
                                {"size", f.size},
                                {"outside_u", f.outside_u},
                                {"good", f.good_count},
                                {"transversal_misses_all_cells", f.transversal_misses_all_cells},
                                {"checks", checks_json(f.checks)}});
            j["capture"] = {{"k", cap.k}, {"sets_of_size_k", cap.sets_of_size_k}, {"families", fams}, {"passed", cap.passed()}};
        }
        j["notes"] = notes;
        j["passed"] = report.passed();
        return j;
    }

    namespace
    {
        auto canonical_list(const std::vector<extremal::CanonicalGraph> &list) -> Json
        {
            Json out = Json::array();
            for (auto &c : list)
                out.push_back(to_graph6(c.graph));
            return out;
        }

        auto theorem2_json(const std::vector<extremal::ExtremalReport> &reports) -> Json
        {
            Json out = Json::array();
            for (auto &r : reports)
                out.push_back({{"k", r.k},
                               {"bound", rational(r.bound)},
                               {"classes", r.classes},
                               {"attainers", canonical_list(r.attainers)},
                               {"violations", canonical_list(r.violations)},
                               {"structure_mismatches", canonical_list(r.structure_mismatches)},
                               {"slack_histogram", r.slack_histogram},
                               {"passed", r.passed()}});
            return out;
        }

        auto tightness_json(const std::vector<extremal::TightnessRow> &rows) -> Json
        {
            Json out = Json::array();
            for (auto &r : rows)
                out.push_back({{"n", r.n}, {"k", r.k}, {"max_mis_k", r.max_count}, {"argmax", r.argmax},
                               {"log_bound", number(r.log_bound)}, {"ratio", number(r.ratio)}});
            return out;
        }
    }

    auto cmd_search(const SearchOptions &options) -> Json
    {
        auto classes = extremal::generate_all(options.n, options.filter, options.workers);

        std::map<std::string, extremal::ClassRecord> stored;
        if (options.records && options.resume)
            stored = extremal::read_records(*options.records);

        std::vector<std::size_t> missing;
        std::vector<SizeProfile> profiles(classes.size());
        for (std::size_t i = 0; i < classes.size(); ++i) {
            auto it = stored.find(to_graph6(classes[i].graph));
            if (it != stored.end())
                profiles[i] = it->second.profile;
            else
                missing.push_back(i);
        }
        extremal::parallel_for(missing.size(), options.workers,
                               [&](std::size_t m) { profiles[missing[m]] = mis_profile(classes[missing[m]].graph); });

        if (options.records) {
            std::ofstream file{*options.records, options.resume ? std::ios::app : std::ios::trunc};
            if (! file)
                throw ParseError{"cannot write records to " + *options.records};
            for (auto i : missing)
                file << extremal::record_to_line(extremal::make_record(classes[i], profiles[i])) << '\n';
        }

        std::vector<Graph> graphs;
        for (auto &c : classes)
            graphs.push_back(c.graph);

        auto t2 = extremal::verify_theorem2(classes, profiles, options.n);
        bool passed = true;
        for (auto &r : t2)
            passed = passed && r.passed();

        Json j{
            {"n", options.n},
            {"filter", to_string(options.filter)},
            {"classes", classes.size()},
            {"records_reused", classes.size() - missing.size()},
            {"theorem2", theorem2_json(t2)},
            {"bound", to_string(options.bound)},
            {"eta", number(options.eta)},
            {"passed", passed},
        };
        auto rows = extremal::tightness_scan(graphs, profiles, options.bound, options.eta);
        j["tightness"] = tightness_json(rows);
        if (options.mibs) {
            auto m = extremal::mibs_scan(options.n, options.filter, options.workers);
            j["mibs"] = {{"classes", m.classes}, {"max_distinct", m.max_distinct}, {"argmax", m.argmax},
                         {"ratio_twelve", number(m.ratio_twelve)}, {"ratio_six", number(m.ratio_six)}};
        }
        return j;
    }

    auto search_csv(const Json &report) -> std::string
    {
        std::string out = "n,k,max_mis_k,argmax,log_bound,ratio\n";
        for (auto &r : report.at("tightness"))
            out += r.at("n").dump() + "," + r.at("k").dump() + "," + r.at("max_mis_k").dump() + "," +
                   r.at("argmax").get<std::string>() + "," + r.at("log_bound").dump() + "," + r.at("ratio").dump() + "\n";
        return out;
    }

    auto cmd_verify_theorem2(int n, int workers) -> Json
    {
        auto reports = extremal::verify_theorem2(n, workers);
        bool passed = true;
        for (auto &r : reports)
            passed = passed && r.passed();

        Json slack = Json::array();
        for (auto &r : extremal::verify_degree2_constants(n, workers)) {
            Json tight = Json::array(), bad = Json::array();
            for (auto &w : r.tight)
                tight.push_back({{"graph6", to_graph6(w.graph.graph)}, {"k", w.k}});
            for (auto &w : r.violations)
                bad.push_back({{"graph6", to_graph6(w.graph.graph)}, {"k", w.k}});
            passed = passed && r.violations.empty();
            slack.push_back({{"condition", to_string(r.condition)},
                             {"factor", misbip::to_string(r.factor)},
                             {"classes", r.classes},
                             {"pairs_checked", r.pairs_checked},
                             {"tight", tight},
                             {"violations", bad}});
        }
        return {{"n", n}, {"classes", reports.empty() ? 0 : reports.front().classes}, {"theorem2", theorem2_json(reports)},
                {"degree2", slack}, {"passed", passed}};
    }

    namespace
    {
        auto read_input(const std::string &input, const std::string &inline_graph6) -> std::vector<Graph>
        {
            if (! inline_graph6.empty())
                return {parse_graph6(inline_graph6)};
            if (input.empty())
                throw ParseError{"no input: give a file, '-' for stdin, or --g6"};
            if (input == "-") {
                std::string text{std::istreambuf_iterator<char>(std::cin), {}};
                return parse_graphs(text);
            }
            return read_graphs_file(input);
        }

        void emit(std::ostream &out, const Json &j) { out << dump(j) << '\n'; }
    }

    auto run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) -> int
    {
        CLI::App app{"Maximal independent set and induced bipartite subgraph workbench"};
        app.require_subcommand(1);

        std::string input, g6, format = "json";
        auto add_input = [&](CLI::App *cmd) {
            cmd->add_option("input", input, "graph6 file (one per line) or edge list; '-' for stdin");
            cmd->add_option("--g6", g6, "graph6 string given inline");
        };
        auto add_format = [&](CLI::App *cmd) {
            cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        };

        std::optional<int> k;
        double eta = 0;
        int n = 0, points = 97, workers = 1;
        long double margin = 0;
        bool list = false;

        auto *mis = app.add_subcommand("mis", "maximal independent sets by size");
        add_input(mis);
        add_format(mis);
        mis->add_option("--k", k, "compare mis_{<=k} with the bounds");
        mis->add_option("--eta", eta, "η for the corollary1 bound")->check(CLI::Range(0.0, 1.0));

        auto *mibs = app.add_subcommand("mibs", "maximal induced bipartite subgraphs");
        add_input(mibs);
        mibs->add_flag("--list", list, "include every record with its witnesses");

        auto *bnd = app.add_subcommand("bounds", "evaluate the bounds at (n, k)");
        bnd->add_option("--n", n, "order")->required()->check(CLI::Range(0, 1 << 20));
        bnd->add_option("--k", k, "size")->required();
        bnd->add_option("--eta", eta, "η in [0, 1]")->check(CLI::Range(0.0, 1.0));
        add_format(bnd);

        auto *curves = app.add_subcommand("curves", "per-n exponents over x = k/n in [1/5, 1/3]");
        curves->add_option("--eta", eta, "η in [0, 1]")->check(CLI::Range(0.0, 1.0));
        curves->add_option("--points", points, "grid points")->check(CLI::Range(2, 1000000));
        add_format(curves);

        auto *solve = app.add_subcommand("solve", "solve for eps, delta and the η, xi, ν witnesses");
        solve->add_option("--margin", margin, "required gap 1 - f(eps)")->check(CLI::Range(0.0, 1.0));

        std::string i0_text, s_text;
        std::uint64_t seed = 1, samples = 200000;
        bool literal_j2 = false, no_capture = false;
        std::optional<int> capture_k;
        auto *pipe = app.add_subcommand("pipeline", "run the K4-free subcubic decomposition and transversal checks");
        add_input(pipe);
        pipe->add_option("--I0", i0_text, "maximal independent set, comma separated (default: smallest, lexicographically first)");
        pipe->add_option("--S", s_text, "cell indices placed in S, comma separated (default: none)");
        pipe->add_option("--seed", seed, "Monte Carlo seed");
        pipe->add_option("--samples", samples, "Monte Carlo samples when the census is too large");
        pipe->add_option("--k", capture_k, "size of the independent sets grouped by the capture check (default |I0|)");
        pipe->add_flag("--literal-j2", literal_j2, "form J2 from J0 \\ J1 only");
        pipe->add_flag("--no-capture", no_capture, "skip the independent-set capture check");

        std::string filter = "none", bound = "eppstein", records;
        bool resume = false, with_mibs = false;
        auto *search = app.add_subcommand("search", "exhaustive scan of all graphs of order n up to isomorphism");
        search->add_option("--n", n, "order, at most 8")->required();
        search->add_option("--filter", filter, "none, k4-free, maxdeg3 or both");
        search->add_option("--bound", bound, "eppstein, nielsen, corollary1 or four-power");
        search->add_option("--eta", eta, "η for corollary1")->check(CLI::Range(0.0, 1.0));
        search->add_option("--workers", workers, "threads")->check(CLI::Range(1, 256));
        search->add_option("--records", records, "NDJSON file of per-class records");
        search->add_flag("--resume", resume, "reuse records already in --records and append new ones");
        search->add_flag("--mibs", with_mibs, "also report the largest MIBS count");
        add_format(search);

        auto *verify = app.add_subcommand("verify-theorem2", "exhaustive bound, equality and degree <= 2 checks");
        verify->add_option("--n", n, "order, at most 8")->default_val(7);
        verify->add_option("--workers", workers, "threads")->check(CLI::Range(1, 256));

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp &e) {
            out << app.help();
            return exit_ok;
        } catch (const CLI::ParseError &e) {
            err << "error: " << e.what() << '\n';
            return exit_parse_error;
        }

        try {
            if (mis->parsed()) {
                for (auto &g : read_input(input, g6)) {
                    if (format == "csv")
                        out << mis_csv(g);
                    else
                        emit(out, cmd_mis(g, k, eta));
                }
            } else if (mibs->parsed()) {
                for (auto &g : read_input(input, g6))
                    emit(out, cmd_mibs(g, list));
            } else if (bnd->parsed()) {
                auto j = cmd_bounds(n, *k, eta);
                if (format == "csv")
                    out << bounds_csv(j);
                else
                    emit(out, j);
            } else if (curves->parsed()) {
                if (format == "csv")
                    out << bounds::curve_csv(bounds::curve_table(points, eta));
                else
                    emit(out, cmd_curves(eta, points));
            } else if (solve->parsed()) {
                emit(out, cmd_solve(margin));
            } else if (pipe->parsed()) {
                bool ok = true;
                for (auto &g : read_input(input, g6)) {
                    PipelineOptions opts;
                    if (! i0_text.empty())
                        opts.i0 = parse_index_list(i0_text);
                    opts.s = parse_index_list(s_text);
                    opts.seed = seed;
                    opts.monte_carlo_samples = samples;
                    opts.rule = literal_j2 ? J2Rule::excluding_j1 : J2Rule::all_shared;
                    opts.capture = ! no_capture;
                    opts.capture_k = capture_k;
                    auto j = cmd_pipeline(g, opts);
                    ok = ok && j.at("passed").get<bool>();
                    emit(out, j);
                }
                return ok ? exit_ok : exit_verification_failed;
            } else if (search->parsed()) {
                SearchOptions opts;
                opts.n = n;
                opts.filter = extremal::parse_filter(filter);
                opts.bound = extremal::parse_bound(bound);
                opts.eta = eta;
                opts.workers = workers;
                opts.mibs = with_mibs;
                if (! records.empty())
                    opts.records = records;
                opts.resume = resume;
                auto j = cmd_search(opts);
                if (format == "csv")
                    out << search_csv(j);
                else
                    emit(out, j);
                return j.at("passed").get<bool>() ? exit_ok : exit_verification_failed;
            } else if (verify->parsed()) {
                auto j = cmd_verify_theorem2(n, workers);
                emit(out, j);
                return j.at("passed").get<bool>() ? exit_ok : exit_verification_failed;
            }
        } catch (const GuardError &e) {
            err << "guard: " << e.what() << '\n';
            return exit_guard;
        } catch (const PreconditionError &e) {
            err << "precondition: " << e.what() << '\n';
            return exit_precondition;
        } catch (const ParseError &e) {
            err << "parse: " << e.what() << '\n';
            return exit_parse_error;
        } catch (const GraphError &e) {
            err << "parse: " << e.what() << '\n';
            return exit_parse_error;
        } catch (const std::invalid_argument &e) {
            err << "error: " << e.what() << '\n';
            return exit_parse_error;
        }
        return exit_ok;
    }
}
