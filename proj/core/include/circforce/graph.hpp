#pragma once

#include <circforce/vertex_set.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace circforce {

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most kMaxOrder vertices, stored as one
/// neighbour mask per vertex. Immutable once constructed.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on `order` vertices.
    explicit Graph(int order);

    /// Throws std::invalid_argument on loops, out-of-range endpoints or order > kMaxOrder.
    /// Repeated edges are merged.
    Graph(int order, std::span<const Edge> edges);

    /// Takes ownership of per-vertex neighbour masks; validates symmetry and irreflexivity.
    static Graph from_adjacency(std::vector<VertexMask> adjacency);

    int order() const noexcept { return static_cast<int>(adjacency_.size()); }
    VertexMask vertices() const noexcept { return all_vertices(order()); }
    VertexMask neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    const std::vector<VertexMask>& adjacency() const noexcept { return adjacency_; }

    bool adjacent(int u, int v) const { return contains(neighbors(u), v); }
    int degree(int v) const { return count(neighbors(v)); }
    int min_degree() const;
    int max_degree() const;
    bool is_regular() const { return min_degree() == max_degree(); }
    std::size_t edge_count() const;

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Relabels vertex v as new_label[v]; new_label must be a permutation of 0..order-1.
    Graph permuted(std::span<const int> new_label) const;

    /// Subgraph induced on `keep`, vertices renumbered in increasing order.
    Graph induced(VertexMask keep) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<VertexMask> adjacency_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);

/// Vertex (x, y) of G □ H is numbered x * |H| + y.
Graph cartesian_product(const Graph& g, const Graph& h);

/// m copies of G joined copy-to-copy, with the last copy twisted one row onto the first.
/// Vertex (row k, copy i) is numbered i * |G| + k, so each copy occupies a contiguous block.
Graph torus_product(const Graph& g, int m);

Graph complement(const Graph& g);

/// H's vertices are numbered after G's.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Connected components as vertex masks, ordered by their lowest vertex.
std::vector<VertexMask> components(const Graph& g);

bool is_connected(const Graph& g);

/// Breadth-first 2-colouring.
bool is_two_colorable(const Graph& g);

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

/// Sorted degree sequence.
std::vector<int> degree_sequence(const Graph& g);

} // namespace circforce
