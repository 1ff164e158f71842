#include <circforce/bounds.hpp>

#include <algorithm>

namespace circforce {

std::optional<int> regular_degree_bound(const Graph& g)
{
    if (g.order() == 0 || !g.is_regular())
        return std::nullopt;
    return g.max_degree();
}

std::optional<int> girth_degree_bound(const Graph& g)
{
    const int delta = g.min_degree();
    if (g.order() == 0 || delta < 2)
        return std::nullopt;
    const auto length = girth(g);
    if (!length)
        return std::nullopt;
    return (*length - 3) * (delta - 2) + delta;
}

LowerBounds zf_lower_bounds(const Graph& g)
{
    LowerBounds out;
    out.regular = regular_degree_bound(g);
    out.girth = girth_degree_bound(g);
    out.value = std::max(out.regular.value_or(0), out.girth.value_or(0));

    int per_component = 0;
    for (VertexMask component : components(g)) {
        const Graph h = g.induced(component);
        per_component += std::max({1, regular_degree_bound(h).value_or(0), girth_degree_bound(h).value_or(0)});
    }
    out.value = std::max(out.value, per_component);
    return out;
}

} // namespace circforce
