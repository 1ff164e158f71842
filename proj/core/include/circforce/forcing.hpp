#pragma once

#include <circforce/graph.hpp>

#include <optional>
#include <vector>

namespace circforce {

/// Filled vertices of a graph under the filling rule.
struct FillState {
    VertexMask filled = 0;
    int order = 0;

    static FillState of(const Graph& g, VertexMask filled);
    static FillState from_vertices(const Graph& g, const std::vector<int>& vertices);

    int size() const { return count(filled); }
    bool is_full() const { return filled == all_vertices(order); }
    bool has(int v) const { return contains(filled, v); }
    std::vector<int> vertices() const;

    bool operator==(const FillState&) const = default;
};

struct Force {
    int forcing;
    int forced;

    bool operator==(const Force&) const = default;
};

/// A zero forcing set together with one valid order of forces that fills the graph.
struct ForcingCertificate {
    FillState initial;
    std::vector<Force> chronology;
};

/// Final filling: the smallest superset of F closed under the filling rule.
/// Throws std::invalid_argument if F names vertices outside the graph.
FillState closure(const Graph& g, const FillState& f);

/// Closure that also records which vertex forced which.
FillState closure(const Graph& g, const FillState& f, std::vector<Force>& chronology);

/// Certificate when the closure of F is all of V(G).
std::optional<ForcingCertificate> is_forcing_set(const Graph& g, const FillState& f);

/// Replays a certificate one force at a time, checking the single-unfilled-neighbour
/// condition at every step and that the graph ends up fully filled.
bool replay(const Graph& g, const ForcingCertificate& certificate);

/// Mask-level closure used by the search; no validation.
VertexMask close_mask(const Graph& g, VertexMask filled);

} // namespace circforce
