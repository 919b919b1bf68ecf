#pragma once

#include "misbip/extremal.hpp"
#include "misbip/graph.hpp"
#include "misbip/theorem1.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace misbip::cli
{
    using Json = nlohmann::json;

    enum ExitCode : int
    {
        exit_ok = 0,
        exit_verification_failed = 1,
        exit_parse_error = 2,
        exit_guard = 3,
        exit_precondition = 4,
    };

    /// Compact, keys sorted.
    auto dump(const Json &j) -> std::string;

    /// Number rounded to 12 significant digits; non-finite values become null.
    auto number(long double x) -> Json;

    /// {"exact": "p/q", "value": x}.
    auto rational(const Rational &r) -> Json;

    /// "3,0,5" -> {0, 3, 5}; empty string -> {}.
    auto parse_index_list(const std::string &text) -> VertexSet;

    auto cmd_mis(const Graph &g, std::optional<int> k, double eta) -> Json;
    auto mis_csv(const Graph &g) -> std::string;

    auto cmd_mibs(const Graph &g, bool list) -> Json;

    auto cmd_bounds(int n, int k, double eta) -> Json;
    auto bounds_csv(const Json &report) -> std::string;

    auto cmd_curves(double eta, int points) -> Json;

    auto cmd_solve(long double margin) -> Json;

    auto cmd_pipeline(const Graph &g, const theorem1::PipelineOptions &options) -> Json;

    struct SearchOptions
    {
        int n = 0;
        extremal::Filter filter = extremal::Filter::none;
        extremal::BoundSelector bound = extremal::BoundSelector::eppstein;
        double eta = 0;
        int workers = 1;
        bool mibs = false;
        /// NDJSON class records; with `resume`, existing records are reused and only new ones appended.
        std::optional<std::string> records;
        bool resume = false;
    };

    auto cmd_search(const SearchOptions &options) -> Json;
    auto search_csv(const Json &report) -> std::string;

    auto cmd_verify_theorem2(int n, int workers) -> Json;

    /// Full command line, including the program name in argv[0]. Returns the exit code.
    auto run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) -> int;
}
