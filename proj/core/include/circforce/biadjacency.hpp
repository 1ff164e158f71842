#pragma once

#include <circforce/circulant.hpp>
#include <circforce/matrix.hpp>

#include <optional>
#include <span>
#include <vector>

namespace circforce {

/// For a connected bipartite C_{2n}(S): each s contributes P^{(s-1)/2} and P^{n-(s+1)/2}
/// (the two coincide when s = n). Returns the distinct exponents in increasing order.
/// Throws std::invalid_argument when the spec is disconnected or not bipartite.
std::vector<int> biadjacency_exponents(const CirculantSpec& spec);

/// Σ_e P^e over the given exponents (n x n, 0/1 when exponents are distinct mod n).
RationalMatrix shift_power_sum(int n, std::span<const int> exponents);

/// Biadjacency matrix with rows indexed by odd vertices v_{2j+1} and columns by even
/// vertices v_{2i}; equals shift_power_sum(n, biadjacency_exponents(spec)).
RationalMatrix biadjacency(const CirculantSpec& spec);

/// Biadjacency read straight off the realized graph, with the same row/column convention.
RationalMatrix biadjacency_from_graph(const Graph& g);

/// a i + b (mod n) maps the exponent set onto {0, 1, ..., t}.
struct SequentialForm {
    int a;
    int b;
    int t;

    bool operator==(const SequentialForm&) const = default;
};

/// First (a, b) in lexicographic order with a a unit mod n; nullopt if none exists.
/// Exponents must be distinct residues mod n.
std::optional<SequentialForm> sequential_normalize(std::span<const int> exponents, int n);

} // namespace circforce
