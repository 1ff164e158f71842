#include <circforce/circulant.hpp>
#include <circforce/constructions.hpp>
#include <circforce/errors.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace circforce {

namespace {

void require(bool condition, Construction kind, const char* what)
{
    if (!condition)
        throw std::invalid_argument(std::string(to_string(kind)) + ": " + what);
}

void check_params(Construction kind, const ConstructionParams& p)
{
    switch (kind) {
    case Construction::TwoColumns:
        require(p.n >= 2 && p.m >= 3, kind, "needs n >= 2 and m >= 3");
        break;
    case Construction::MobiusThree:
        require(p.n >= 3 && p.m == 3, kind, "needs n >= 3 and m = 3");
        break;
    case Construction::NeighborhoodMinusOne:
        require(p.n >= 3 && p.m == 2, kind, "needs n >= 3 and m = 2");
        require(p.layout == Layout::Circulant, kind, "exists only in circulant layout");
        break;
    case Construction::CycleTorus:
        require(p.n >= 3 && p.m >= 3, kind, "needs n >= 3 and m >= 3");
        break;
    }
    require(p.n * p.m <= kMaxOrder, kind, "graph too large");
}

CirculantSpec neighborhood_spec(int n)
{
    std::vector<int> connections{1};
    for (int j = 1; 2 * j <= n; ++j)
        connections.push_back(2 * j);
    return CirculantSpec(2 * n, connections);
}

// Product-layout vertex of (row, copy).
int at(const ConstructionParams& p, int row, int copy) { return copy * p.n + row; }

VertexMask product_set(Construction kind, const ConstructionParams& p)
{
    VertexMask set = 0;
    switch (kind) {
    case Construction::TwoColumns:
        for (int row = 0; row < p.n; ++row)
            set |= bit(at(p, row, 0)) | bit(at(p, row, 1));
        break;
    case Construction::MobiusThree:
        for (int row = 0; row + 1 < p.n; ++row)
            set |= bit(at(p, row, 0)) | bit(at(p, row, 1));
        set |= bit(at(p, 0, 2));
        break;
    case Construction::CycleTorus:
        if (p.n == p.m) {
            const int k = (p.m + 1) / 2 - 1;
            for (int row = 0; row < p.n; ++row)
                set |= bit(at(p, row, k));
            for (int row = 1; row < p.n; ++row)
                set |= bit(at(p, row, k + 1));
        }
        else if (p.n <= p.m) {
            for (int row = 0; row < p.n; ++row)
                set |= bit(at(p, row, 0)) | bit(at(p, row, 1));
        }
        else {
            for (int copy = 0; copy < p.m; ++copy)
                set |= bit(at(p, 0, copy)) | bit(at(p, 1, copy));
        }
        break;
    case Construction::NeighborhoodMinusOne:
        break;
    }
    return set;
}

} // namespace

const char* to_string(Construction kind)
{
    switch (kind) {
    case Construction::TwoColumns:
        return "two-columns";
    case Construction::MobiusThree:
        return "mobius-three";
    case Construction::NeighborhoodMinusOne:
        return "neighborhood-minus-one";
    case Construction::CycleTorus:
        return "cycle-torus";
    }
    return "?";
}

std::vector<int> torus_to_circulant_labels(int n, int m)
{
    std::vector<int> labels(static_cast<std::size_t>(n * m));
    for (int copy = 0; copy < m; ++copy)
        for (int row = 0; row < n; ++row)
            labels[static_cast<std::size_t>(copy * n + row)] = copy + m * row;
    return labels;
}

Graph construction_graph(Construction kind, const ConstructionParams& p)
{
    check_params(kind, p);
    if (kind == Construction::NeighborhoodMinusOne)
        return build_circulant(neighborhood_spec(p.n));
    const Graph base = kind == Construction::CycleTorus ? cycle_graph(p.n) : complete_graph(p.n);
    const Graph product = torus_product(base, p.m);
    if (p.layout == Layout::Product)
        return product;
    return product.permuted(torus_to_circulant_labels(p.n, p.m));
}

int construction_size(Construction kind, const ConstructionParams& p)
{
    switch (kind) {
    case Construction::TwoColumns:
        return 2 * p.n;
    case Construction::MobiusThree:
        return 2 * p.n - 1;
    case Construction::NeighborhoodMinusOne:
        return p.n + 1;
    case Construction::CycleTorus:
        return p.n == p.m ? 2 * p.m - 1 : 2 * std::min(p.n, p.m);
    }
    return 0;
}

FillState witness_set(Construction kind, const ConstructionParams& p)
{
    const Graph g = construction_graph(kind, p);
    VertexMask set = 0;
    if (kind == Construction::NeighborhoodMinusOne) {
        set = bit(0) | (g.neighbors(0) & ~bit(1));
    }
    else {
        const VertexMask product = product_set(kind, p);
        if (p.layout == Layout::Product)
            set = product;
        else {
            const auto labels = torus_to_circulant_labels(p.n, p.m);
            for_each_vertex(product, [&](int v) { set |= bit(labels[static_cast<std::size_t>(v)]); });
        }
    }
    const FillState f = FillState::of(g, set);
    if (f.size() != construction_size(kind, p))
        throw InternalInconsistency(std::string(to_string(kind)) + " built a set of the wrong size");
    if (!closure(g, f).is_full())
        throw InternalInconsistency(std::string(to_string(kind)) + " set with n = " + std::to_string(p.n)
                                    + ", m = " + std::to_string(p.m) + " does not force");
    return f;
}

} // namespace circforce
