#include <circforce/graph.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace circforce {

namespace {

void require_order(int order)
{
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("graph order " + std::to_string(order) + " outside [0, "
                                    + std::to_string(kMaxOrder) + "]");
}

} // namespace

Graph::Graph(int order)
{
    require_order(order);
    adjacency_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("edge {" + std::to_string(u) + ", " + std::to_string(v)
                                        + "} has an endpoint outside the graph");
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adjacency_[static_cast<std::size_t>(u)] |= bit(v);
        adjacency_[static_cast<std::size_t>(v)] |= bit(u);
    }
}

Graph Graph::from_adjacency(std::vector<VertexMask> adjacency)
{
    const int order = static_cast<int>(adjacency.size());
    require_order(order);
    const VertexMask everything = all_vertices(order);
    for (int v = 0; v < order; ++v) {
        const VertexMask nv = adjacency[static_cast<std::size_t>(v)];
        if (nv & ~everything)
            throw std::invalid_argument("neighbour mask of vertex " + std::to_string(v) + " leaves the graph");
        if (contains(nv, v))
            throw std::invalid_argument("loop at vertex " + std::to_string(v));
        for_each_vertex(nv, [&](int u) {
            if (!contains(adjacency[static_cast<std::size_t>(u)], v))
                throw std::invalid_argument("adjacency is not symmetric at {" + std::to_string(u) + ", "
                                            + std::to_string(v) + "}");
        });
    }
    Graph g;
    g.adjacency_ = std::move(adjacency);
    return g;
}

int Graph::min_degree() const
{
    int best = std::numeric_limits<int>::max();
    for (auto nv : adjacency_)
        best = std::min(best, count(nv));
    return adjacency_.empty() ? 0 : best;
}

int Graph::max_degree() const
{
    int best = 0;
    for (auto nv : adjacency_)
        best = std::max(best, count(nv));
    return best;
}

std::size_t Graph::edge_count() const
{
    std::size_t total = 0;
    for (auto nv : adjacency_)
        total += static_cast<std::size_t>(count(nv));
    return total / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for_each_vertex(neighbors(u) & ~all_vertices(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

Graph Graph::permuted(std::span<const int> new_label) const
{
    if (static_cast<int>(new_label.size()) != order())
        throw std::invalid_argument("relabeling has the wrong length");
    VertexMask seen = 0;
    for (int v : new_label) {
        if (v < 0 || v >= order() || contains(seen, v))
            throw std::invalid_argument("relabeling is not a permutation");
        seen |= bit(v);
    }
    std::vector<VertexMask> adjacency(adjacency_.size(), 0);
    for (int u = 0; u < order(); ++u) {
        VertexMask mapped = 0;
        for_each_vertex(neighbors(u), [&](int v) { mapped |= bit(new_label[static_cast<std::size_t>(v)]); });
        adjacency[static_cast<std::size_t>(new_label[static_cast<std::size_t>(u)])] = mapped;
    }
    Graph g;
    g.adjacency_ = std::move(adjacency);
    return g;
}

Graph Graph::induced(VertexMask keep) const
{
    keep &= vertices();
    std::vector<int> position(adjacency_.size(), -1);
    int next = 0;
    for_each_vertex(keep, [&](int v) { position[static_cast<std::size_t>(v)] = next++; });
    std::vector<VertexMask> adjacency(static_cast<std::size_t>(next), 0);
    for_each_vertex(keep, [&](int v) {
        VertexMask mapped = 0;
        for_each_vertex(neighbors(v) & keep, [&](int u) { mapped |= bit(position[static_cast<std::size_t>(u)]); });
        adjacency[static_cast<std::size_t>(position[static_cast<std::size_t>(v)])] = mapped;
    });
    Graph g;
    g.adjacency_ = std::move(adjacency);
    return g;
}

Graph complete_graph(int n)
{
    require_order(n);
    std::vector<VertexMask> adjacency(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adjacency[static_cast<std::size_t>(v)] = all_vertices(n) & ~bit(v);
    return Graph::from_adjacency(std::move(adjacency));
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h)
{
    const int ng = g.order(), nh = h.order();
    if (ng == 0 || nh == 0)
        throw std::invalid_argument("cartesian product of an empty graph");
    if (ng * nh > kMaxOrder)
        throw std::invalid_argument("product order " + std::to_string(ng * nh) + " exceeds "
                                    + std::to_string(kMaxOrder));
    std::vector<Edge> edges;
    for (int x = 0; x < ng; ++x)
        for (int y = 0; y < nh; ++y) {
            const int v = x * nh + y;
            for_each_vertex(h.neighbors(y), [&](int y2) { edges.emplace_back(v, x * nh + y2); });
            for_each_vertex(g.neighbors(x), [&](int x2) { edges.emplace_back(v, x2 * nh + y); });
        }
    return Graph(ng * nh, edges);
}

Graph torus_product(const Graph& g, int m)
{
    if (m < 3)
        throw std::invalid_argument("torus product needs m >= 3");
    const int n = g.order();
    if (n == 0)
        throw std::invalid_argument("torus product of an empty graph");
    if (n * m > kMaxOrder)
        throw std::invalid_argument("product order " + std::to_string(n * m) + " exceeds "
                                    + std::to_string(kMaxOrder));
    std::vector<Edge> edges;
    for (int copy = 0; copy < m; ++copy) {
        for (auto [u, v] : g.edges())
            edges.emplace_back(copy * n + u, copy * n + v);
        for (int row = 0; row < n; ++row) {
            if (copy + 1 < m)
                edges.emplace_back(copy * n + row, (copy + 1) * n + row);
            else
                edges.emplace_back(copy * n + row, (row + 1) % n);
        }
    }
    return Graph(n * m, edges);
}

Graph complement(const Graph& g)
{
    std::vector<VertexMask> adjacency(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        adjacency[static_cast<std::size_t>(v)] = g.vertices() & ~g.neighbors(v) & ~bit(v);
    return Graph::from_adjacency(std::move(adjacency));
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int shift = g.order();
    if (shift + h.order() > kMaxOrder)
        throw std::invalid_argument("union order exceeds " + std::to_string(kMaxOrder));
    std::vector<VertexMask> adjacency = g.adjacency();
    for (auto nv : h.adjacency())
        adjacency.push_back(nv << shift);
    return Graph::from_adjacency(std::move(adjacency));
}

std::vector<VertexMask> components(const Graph& g)
{
    std::vector<VertexMask> out;
    VertexMask unseen = g.vertices();
    while (unseen) {
        VertexMask component = bit(lowest(unseen));
        VertexMask frontier = component;
        while (frontier) {
            VertexMask next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next & ~component;
            component |= frontier;
        }
        out.push_back(component);
        unseen &= ~component;
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_two_colorable(const Graph& g)
{
    std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    for (int root = 0; root < g.order(); ++root) {
        if (colour[static_cast<std::size_t>(root)] != -1)
            continue;
        colour[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            bool clash = false;
            for_each_vertex(g.neighbors(v), [&](int u) {
                auto& cu = colour[static_cast<std::size_t>(u)];
                if (cu == -1) {
                    cu = 1 - colour[static_cast<std::size_t>(v)];
                    queue.push_back(u);
                }
                else if (cu == colour[static_cast<std::size_t>(v)])
                    clash = true;
            });
            if (clash)
                return false;
        }
    }
    return true;
}

std::optional<int> girth(const Graph& g)
{
    // BFS from every root; a non-tree edge {u, w} closes a walk of length d(u) + d(w) + 1
    // through the root. The minimum over all roots is the girth.
    int best = std::numeric_limits<int>::max();
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            if (2 * dist[static_cast<std::size_t>(v)] + 1 >= best)
                break;
            for_each_vertex(g.neighbors(v), [&](int u) {
                auto& du = dist[static_cast<std::size_t>(u)];
                if (du == -1) {
                    du = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(u)] = v;
                    queue.push_back(u);
                }
                else if (parent[static_cast<std::size_t>(v)] != u)
                    best = std::min(best, du + dist[static_cast<std::size_t>(v)] + 1);
            });
        }
    }
    if (best == std::numeric_limits<int>::max())
        return std::nullopt;
    return best;
}

std::vector<int> degree_sequence(const Graph& g)
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace circforce
