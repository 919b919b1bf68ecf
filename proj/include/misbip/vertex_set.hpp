#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace misbip
{
    inline constexpr int max_order = 64;

    /// A set of vertex indices in 0..63 stored as a single machine word.
    class VertexSet
    {
    public:
        constexpr VertexSet() = default;
        constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

        static constexpr auto universe(int n) -> VertexSet
        {
            return VertexSet{n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
        }

        static constexpr auto single(int v) -> VertexSet { return VertexSet{std::uint64_t{1} << v}; }

        static auto of(std::initializer_list<int> vs) -> VertexSet
        {
            VertexSet s;
            for (int v : vs)
                s.insert(v);
            return s;
        }

        constexpr auto bits() const -> std::uint64_t { return bits_; }
        constexpr auto size() const -> int { return std::popcount(bits_); }
        constexpr auto empty() const -> bool { return bits_ == 0; }
        constexpr auto contains(int v) const -> bool { return (bits_ >> v) & 1U; }
        constexpr auto first() const -> int { return std::countr_zero(bits_); }

        constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
        constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

        constexpr auto intersects(VertexSet o) const -> bool { return (bits_ & o.bits_) != 0; }
        constexpr auto subset_of(VertexSet o) const -> bool { return (bits_ & ~o.bits_) == 0; }

        constexpr auto operator|(VertexSet o) const -> VertexSet { return VertexSet{bits_ | o.bits_}; }
        constexpr auto operator&(VertexSet o) const -> VertexSet { return VertexSet{bits_ & o.bits_}; }
        constexpr auto operator-(VertexSet o) const -> VertexSet { return VertexSet{bits_ & ~o.bits_}; }
        constexpr auto operator|=(VertexSet o) -> VertexSet & { bits_ |= o.bits_; return *this; }
        constexpr auto operator&=(VertexSet o) -> VertexSet & { bits_ &= o.bits_; return *this; }
        constexpr auto operator-=(VertexSet o) -> VertexSet & { bits_ &= ~o.bits_; return *this; }

        constexpr auto operator==(const VertexSet &) const -> bool = default;
        constexpr auto operator<=>(const VertexSet &) const = default;

        /// Iterates set members in increasing order.
        class iterator
        {
        public:
            using value_type = int;
            using difference_type = std::ptrdiff_t;

            constexpr iterator() = default;
            constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
            constexpr auto operator*() const -> int { return std::countr_zero(rest_); }
            constexpr auto operator++() -> iterator & { rest_ &= rest_ - 1; return *this; }
            constexpr auto operator++(int) -> iterator { auto t = *this; ++*this; return t; }
            constexpr auto operator==(const iterator &) const -> bool = default;

        private:
            std::uint64_t rest_ = 0;
        };

        constexpr auto begin() const -> iterator { return iterator{bits_}; }
        constexpr auto end() const -> iterator { return iterator{0}; }

        auto to_vector() const -> std::vector<int> { return {begin(), end()}; }

    private:
        std::uint64_t bits_ = 0;
    };

    /// Orders sets by their sorted member lists, e.g. {0,3} before {1,2}.
    inline auto lexicographically_less(VertexSet a, VertexSet b) -> bool
    {
        while (! a.empty() && ! b.empty()) {
            int x = a.first(), y = b.first();
            if (x != y)
                return x < y;
            a.erase(x);
            b.erase(y);
        }
        return a.empty() && ! b.empty();
    }

    auto to_string(VertexSet s) -> std::string;
}
