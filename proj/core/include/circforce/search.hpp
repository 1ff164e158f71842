#pragma once

#include <circforce/forcing.hpp>
#include <circforce/graph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>

namespace circforce {

struct SearchBounds {
    int lower = 1;
    int upper = kMaxOrder;
};

struct SearchOptions {
    /// Largest component the search will accept.
    int ceiling = 24;
    /// Starting size and largest size tried. When absent the lower end comes from
    /// zf_lower_bounds and the upper end is the component order.
    std::optional<SearchBounds> hints;
    /// Every component is vertex-transitive, so its lowest vertex may be fixed in F.
    bool vertex_transitive = false;
    /// Skip candidates that miss a fort found earlier in the search.
    bool fort_pruning = false;
    unsigned threads = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct ZfResult {
    int z = 0;
    /// Least minimum zero forcing set under the enumeration order.
    FillState witness;
    /// Candidates enumerated, including those skipped by fort pruning.
    std::uint64_t candidates = 0;
    /// Candidates rejected by a stored fort without computing a closure.
    std::uint64_t pruned = 0;
};

/// Exact zero forcing number. Components are solved separately and summed.
/// Within one component, sizes k = lower, lower + 1, ... are tried in turn; the k-subsets
/// are enumerated in increasing mask order, so the witness is the least mask of minimum size
/// among the enumerated candidates (those containing the lowest vertex when
/// vertex_transitive is set).
///
/// Throws SearchCeilingExceeded for components above the ceiling, BudgetExhausted when the
/// deadline passes, and std::logic_error when hints.upper is below the true value.
ZfResult zf_exact(const Graph& g, const SearchOptions& options = {});

} // namespace circforce
