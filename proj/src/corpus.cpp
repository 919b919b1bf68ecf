#include "misbip/corpus.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace misbip::corpus
{
    Rng::Rng(std::uint64_t seed)
    {
        std::mt19937_64 engine{seed};
        state_[0] = engine();
        state_[1] = engine();
    }

    // xorshift128+
    auto Rng::next() -> std::uint64_t
    {
        std::uint64_t s1 = state_[0];
        const std::uint64_t s0 = state_[1];
        state_[0] = s0;
        s1 ^= s1 << 23;
        state_[1] = s1 ^ s0 ^ (s1 >> 17) ^ (s0 >> 26);
        return state_[1] + s0;
    }

    auto Rng::below(std::uint64_t bound) -> std::uint64_t
    {
        return bound == 0 ? 0 : next() % bound;
    }

    auto Rng::chance(double p) -> bool
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

    auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        Rng rng{seed};
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(p))
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    namespace
    {
        // a new edge uv closes a K4 iff the common neighbourhood of u and v contains an edge
        auto closes_k4(const std::vector<VertexSet> &adj, int u, int v) -> bool
        {
            auto common = adj[u] & adj[v];
            for (int w : common)
                if (adj[w].intersects(common))
                    return true;
            return false;
        }

        void link(std::vector<VertexSet> &adj, int u, int v, bool on)
        {
            if (on) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            else {
                adj[u].erase(v);
                adj[v].erase(u);
            }
        }
    }

    auto random_k4_free_subcubic(int n, std::uint64_t seed) -> Graph
    {
        Rng rng{seed};
        std::vector<VertexSet> adj(static_cast<std::size_t>(n));

        while (true) {
            std::vector<Edge> open;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (adj[u].size() < 3 && adj[v].size() < 3 && ! adj[u].contains(v) && ! closes_k4(adj, u, v))
                        open.emplace_back(u, v);
            if (open.empty())
                break;
            auto [u, v] = open[rng.below(open.size())];
            link(adj, u, v, true);
        }

        for (int round = 0; round < 4 * n; ++round) {
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v : adj[u])
                    if (u < v)
                        edges.emplace_back(u, v);
            if (edges.size() < 2)
                break;
            auto [a, b] = edges[rng.below(edges.size())];
            auto [c, d] = edges[rng.below(edges.size())];
            if (rng.chance(0.5))
                std::swap(c, d);
            // ab, cd -> ad, cb
            if (a == c || a == d || b == c || b == d || adj[a].contains(d) || adj[c].contains(b))
                continue;
            link(adj, a, b, false);
            link(adj, c, d, false);
            bool ok = ! closes_k4(adj, a, d);
            link(adj, a, d, true);
            ok = ok && ! closes_k4(adj, c, b);
            if (ok)
                link(adj, c, b, true);
            else {
                link(adj, a, d, false);
                link(adj, a, b, true);
                link(adj, c, d, true);
            }
        }
        return Graph::from_rows(adj);
    }

    auto parse_manifest(const std::string &text) -> std::vector<ManifestEntry>
    {
        std::vector<ManifestEntry> entries;
        std::istringstream in{text};
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            std::istringstream fields{line};
            ManifestEntry e;
            if (! (fields >> e.seed))
                continue;
            if (! (fields >> e.n))
                throw std::runtime_error{"manifest line without order: " + line};
            entries.push_back(e);
        }
        return entries;
    }

    auto read_manifest(const std::string &path) -> std::vector<ManifestEntry>
    {
        std::ifstream in{path};
        if (! in)
            throw std::runtime_error{"cannot open manifest " + path};
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_manifest(buffer.str());
    }
}
