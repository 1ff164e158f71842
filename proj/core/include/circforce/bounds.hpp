#pragma once

#include <circforce/graph.hpp>

#include <optional>

namespace circforce {

/// Lower bounds on Z(G).
struct LowerBounds {
    /// Best bound: the larger of the whole-graph bounds and the sum of per-component bounds.
    int value = 0;
    /// k when G is k-regular.
    std::optional<int> regular;
    /// (g - 3)(δ - 2) + δ when G has a cycle and minimum degree δ >= 2.
    std::optional<int> girth;
};

std::optional<int> regular_degree_bound(const Graph& g);
std::optional<int> girth_degree_bound(const Graph& g);

LowerBounds zf_lower_bounds(const Graph& g);

} // namespace circforce
