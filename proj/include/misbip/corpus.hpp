#pragma once

#include "misbip/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace misbip::corpus
{
    /// Portable generator: mt19937_64 output reduced by modulo, so seeds give the same graphs
    /// under every standard library.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed);
        auto below(std::uint64_t bound) -> std::uint64_t;
        auto chance(double p) -> bool;

    private:
        std::uint64_t state_[2];
        auto next() -> std::uint64_t;
    };

    /// Erdős–Rényi-style graph with edge probability p.
    auto random_graph(int n, double p, std::uint64_t seed) -> Graph;

    /// Near-cubic K4-free graph: greedy random edges between vertices of degree < 3, then
    /// degree-preserving swaps; any step creating a K4 is rejected.
    auto random_k4_free_subcubic(int n, std::uint64_t seed) -> Graph;

    struct ManifestEntry
    {
        std::uint64_t seed = 0;
        int n = 0;
    };

    /// Lines "seed n"; '#' starts a comment.
    auto parse_manifest(const std::string &text) -> std::vector<ManifestEntry>;
    auto read_manifest(const std::string &path) -> std::vector<ManifestEntry>;
}
