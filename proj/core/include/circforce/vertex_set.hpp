#pragma once

#include <bit>
#include <cstdint>

namespace circforce {

/// Membership mask over the vertices of a graph; bit v set means vertex v is present.
using VertexMask = std::uint64_t;

/// Largest graph order representable by a single VertexMask.
inline constexpr int kMaxOrder = 64;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

constexpr VertexMask all_vertices(int order)
{
    return order >= kMaxOrder ? ~VertexMask{0} : (VertexMask{1} << order) - 1;
}

constexpr int count(VertexMask m) { return std::popcount(m); }

constexpr bool contains(VertexMask m, int v) { return (m >> v) & 1U; }

constexpr int lowest(VertexMask m) { return std::countr_zero(m); }

// Calls f(v) for every vertex of m in increasing order.
template <typename F>
constexpr void for_each_vertex(VertexMask m, F&& f)
{
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

} // namespace circforce
