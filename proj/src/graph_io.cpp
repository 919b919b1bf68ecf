#include "misbip/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace misbip
{
    namespace
    {
        constexpr int offset = 63;

        auto trim(std::string_view s) -> std::string_view
        {
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        auto chunk(std::string_view text, std::size_t pos) -> int
        {
            int c = static_cast<unsigned char>(text[pos]);
            if (c < offset || c > offset + 63)
                throw ParseError{"graph6: illegal character at position " + std::to_string(pos)};
            return c - offset;
        }
    }

    auto parse_graph6(std::string_view text) -> Graph
    {
        text = trim(text);
        constexpr std::string_view header = ">>graph6<<";
        if (text.starts_with(header))
            text.remove_prefix(header.size());
        if (text.empty())
            throw ParseError{"graph6: empty input"};

        std::size_t pos = 0;
        long n = 0;
        if (text[0] == '~') {
            if (text.size() < 4)
                throw ParseError{"graph6: truncated order header"};
            if (text[1] == '~')
                throw ParseError{"graph6: orders above 64 are not supported"};
            for (pos = 1; pos < 4; ++pos)
                n = (n << 6) | chunk(text, pos);
            if (n < 63)
                throw ParseError{"graph6: non-canonical long header for order " + std::to_string(n)};
        }
        else {
            n = chunk(text, 0);
            if (n == 63)
                throw ParseError{"graph6: illegal character at position 0"};
            pos = 1;
        }
        if (n > max_order)
            throw ParseError{"graph6: order " + std::to_string(n) + " exceeds 64"};

        const long pairs = n * (n - 1) / 2;
        const std::size_t expected = (pairs + 5) / 6;
        if (text.size() - pos != expected)
            throw ParseError{"graph6: expected " + std::to_string(expected) + " data bytes for order " +
                std::to_string(n) + ", found " + std::to_string(text.size() - pos)};

        std::vector<Edge> edges;
        long bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) {
                int value = chunk(text, pos + bit / 6);
                if ((value >> (5 - bit % 6)) & 1)
                    edges.emplace_back(i, j);
            }
        if (bit % 6 != 0) {
            int last = chunk(text, pos + bit / 6);
            if (last & ((1 << (6 - bit % 6)) - 1))
                throw ParseError{"graph6: nonzero padding bits"};
        }
        for (std::size_t p = pos; p < text.size(); ++p)
            chunk(text, p);
        return Graph(static_cast<int>(n), edges);
    }

    auto to_graph6(const Graph &g) -> std::string
    {
        std::string out;
        const int n = g.order();
        if (n <= 62)
            out.push_back(static_cast<char>(n + offset));
        else {
            out.push_back('~');
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63) + offset));
        }
        int value = 0, filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(value + offset));
                    value = filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>((value << (6 - filled)) + offset));
        return out;
    }

    auto parse_edge_list(std::string_view text) -> Graph
    {
        std::istringstream in{std::string{text}};
        long n = 0, m = 0;
        if (! (in >> n >> m))
            throw ParseError{"edge list: missing 'n m' header"};
        if (n < 0 || n > max_order)
            throw ParseError{"edge list: order " + std::to_string(n) + " outside 0..64"};
        if (m < 0)
            throw ParseError{"edge list: negative edge count"};
        std::vector<Edge> edges;
        for (long e = 0; e < m; ++e) {
            long u = 0, v = 0;
            if (! (in >> u >> v))
                throw ParseError{"edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(e)};
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw ParseError{"edge list: invalid edge " + std::to_string(u) + " " + std::to_string(v)};
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
        std::string rest;
        if (in >> rest)
            throw ParseError{"edge list: trailing content '" + rest + "'"};
        return Graph(static_cast<int>(n), edges);
    }

    auto to_edge_list(const Graph &g) -> std::string
    {
        std::ostringstream out;
        auto es = g.edges();
        out << g.order() << ' ' << es.size() << '\n';
        for (auto [u, v] : es)
            out << u << ' ' << v << '\n';
        return out.str();
    }

    auto parse_graphs(std::string_view text) -> std::vector<Graph>
    {
        auto body = trim(text);
        if (body.empty())
            throw ParseError{"no graph in input"};
        if (std::isdigit(static_cast<unsigned char>(body.front())))
            return {parse_edge_list(body)};

        std::vector<Graph> result;
        std::istringstream in{std::string{body}};
        std::string line;
        while (std::getline(in, line))
            if (! trim(line).empty())
                result.push_back(parse_graph6(line));
        return result;
    }

    auto read_graphs_file(const std::string &path) -> std::vector<Graph>
    {
        std::ifstream in{path};
        if (! in)
            throw ParseError{"cannot open " + path};
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_graphs(buffer.str());
    }
}
