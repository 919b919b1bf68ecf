#pragma once

#include "misbip/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace misbip
{
    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// graph6: order byte(s) then the upper triangle read column by column
    /// ((0,1),(0,2),(1,2),(0,3),...), packed six bits per byte, each byte offset by 63.
    /// Accepts the single-byte header (n <= 62) and the '~' three-byte header up to n = 64,
    /// optionally preceded by ">>graph6<<". Surrounding whitespace is ignored.
    auto parse_graph6(std::string_view text) -> Graph;
    auto to_graph6(const Graph &g) -> std::string;

    /// "n m" followed by m lines "u v", 0-indexed.
    auto parse_edge_list(std::string_view text) -> Graph;
    auto to_edge_list(const Graph &g) -> std::string;

    /// A whole input file: an edge list if it starts with a digit, otherwise one graph6 string per
    /// non-empty line.
    auto parse_graphs(std::string_view text) -> std::vector<Graph>;
    auto read_graphs_file(const std::string &path) -> std::vector<Graph>;
}
