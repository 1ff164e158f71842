#include <circforce/forcing.hpp>

#include <stdexcept>
#include <string>

namespace circforce {

namespace {

// Queue engine: a filled vertex is a candidate whenever its unfilled-neighbour count drops to 1.
template <typename OnForce>
VertexMask run_closure(const Graph& g, VertexMask filled, OnForce&& on_force)
{
    const int n = g.order();
    int unfilled[kMaxOrder];
    int queue[kMaxOrder * 2];
    int head = 0, tail = 0;
    for (int v = 0; v < n; ++v) {
        unfilled[v] = count(g.neighbors(v) & ~filled);
        if (contains(filled, v) && unfilled[v] == 1)
            queue[tail++] = v;
    }
    while (head < tail) {
        const int v = queue[head++];
        if (unfilled[v] != 1)
            continue;
        const int w = lowest(g.neighbors(v) & ~filled);
        on_force(v, w);
        filled |= bit(w);
        for_each_vertex(g.neighbors(w), [&](int u) {
            --unfilled[u];
            if (unfilled[u] == 1 && contains(filled, u))
                queue[tail++] = u;
        });
        if (unfilled[w] == 1)
            queue[tail++] = w;
        // Each vertex enters the queue at most twice: once when filled with a single
        // unfilled neighbour, once when its count falls to 1; the buffer is sized for that.
    }
    return filled;
}

void require_inside(const Graph& g, VertexMask filled)
{
    if (filled & ~g.vertices())
        throw std::invalid_argument("fill set names vertices outside the graph");
}

} // namespace

FillState FillState::of(const Graph& g, VertexMask filled)
{
    require_inside(g, filled);
    return {filled, g.order()};
}

FillState FillState::from_vertices(const Graph& g, const std::vector<int>& vertices)
{
    VertexMask mask = 0;
    for (int v : vertices) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("vertex " + std::to_string(v) + " is outside the graph");
        mask |= bit(v);
    }
    return {mask, g.order()};
}

std::vector<int> FillState::vertices() const
{
    std::vector<int> out;
    for_each_vertex(filled, [&](int v) { out.push_back(v); });
    return out;
}

VertexMask close_mask(const Graph& g, VertexMask filled)
{
    return run_closure(g, filled, [](int, int) {});
}

FillState closure(const Graph& g, const FillState& f)
{
    require_inside(g, f.filled);
    return {close_mask(g, f.filled), g.order()};
}

FillState closure(const Graph& g, const FillState& f, std::vector<Force>& chronology)
{
    require_inside(g, f.filled);
    chronology.clear();
    const VertexMask out = run_closure(g, f.filled, [&](int v, int w) { chronology.push_back({v, w}); });
    return {out, g.order()};
}

std::optional<ForcingCertificate> is_forcing_set(const Graph& g, const FillState& f)
{
    ForcingCertificate certificate{f, {}};
    if (!closure(g, f, certificate.chronology).is_full())
        return std::nullopt;
    return certificate;
}

bool replay(const Graph& g, const ForcingCertificate& certificate)
{
    if (certificate.initial.order != g.order() || (certificate.initial.filled & ~g.vertices()))
        return false;
    VertexMask filled = certificate.initial.filled;
    for (auto [v, w] : certificate.chronology) {
        if (v < 0 || v >= g.order() || w < 0 || w >= g.order())
            return false;
        if (!contains(filled, v) || contains(filled, w) || !g.adjacent(v, w))
            return false;
        if (count(g.neighbors(v) & ~filled) != 1)
            return false;
        filled |= bit(w);
    }
    return filled == g.vertices();
}

} // namespace circforce
