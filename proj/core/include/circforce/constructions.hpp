#pragma once

#include <circforce/forcing.hpp>
#include <circforce/graph.hpp>

namespace circforce {

/// Explicit zero forcing sets for torus-type circulants.
enum class Construction {
    /// K_n ⊠ C_m: two adjacent copies of K_n, size 2n.
    TwoColumns,
    /// K_n ⊠ C_3, n >= 3: n - 1 vertices of each of the first two copies plus one of the third, size 2n - 1.
    MobiusThree,
    /// C_{2n}(1, 2, 4, ..., 2⌊n/2⌋), n >= 3: a vertex and all neighbours but one, size n + 1.
    NeighborhoodMinusOne,
    /// C_n ⊠ C_m: two adjacent columns or rows (size 2 min{n, m}), or 2m - 1 when m = n.
    CycleTorus,
};

enum class Layout {
    /// Vertex (row k, copy i) is i * n + k, as in torus_product.
    Product,
    /// The isomorphic circulant C_{nm}(...), via (row k, copy i) -> i + m k.
    Circulant,
};

struct ConstructionParams {
    int n = 0;
    int m = 0;
    Layout layout = Layout::Circulant;
};

/// The graph the construction lives on.
Graph construction_graph(Construction kind, const ConstructionParams& params);

/// The constructed set, already verified to be zero forcing on construction_graph.
/// Throws std::invalid_argument when params fall outside the construction's hypotheses and
/// InternalInconsistency if the set fails to force.
FillState witness_set(Construction kind, const ConstructionParams& params);

/// Size the construction is expected to attain.
int construction_size(Construction kind, const ConstructionParams& params);

const char* to_string(Construction kind);

/// Vertex map (row k, copy i) -> i + m k, indexed by product vertex i * n + k.
std::vector<int> torus_to_circulant_labels(int n, int m);

} // namespace circforce
