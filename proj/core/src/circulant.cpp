#include <circforce/circulant.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace circforce {

CirculantSpec::CirculantSpec(int order, std::vector<int> connection_set)
    : order_(order), connections_(std::move(connection_set))
{
    if (order_ < 1)
        throw std::invalid_argument("circulant order must be positive");
    if (connections_.empty())
        throw std::invalid_argument("connection set of C" + std::to_string(order_) + " is empty");
    for (std::size_t i = 0; i < connections_.size(); ++i) {
        const int s = connections_[i];
        if (s < 1 || 2 * s > order_)
            throw std::invalid_argument("connection " + std::to_string(s) + " outside [1, "
                                        + std::to_string(order_ / 2) + "]");
        if (i > 0 && connections_[i - 1] >= s)
            throw std::invalid_argument(connections_[i - 1] == s
                                            ? "duplicate connection " + std::to_string(s)
                                            : "connection set must be strictly increasing");
    }
}

CirculantSpec CirculantSpec::normalized(int order, std::vector<int> elements)
{
    std::sort(elements.begin(), elements.end());
    return CirculantSpec(order, std::move(elements));
}

int CirculantSpec::degree() const noexcept
{
    const int t = size();
    return 2 * largest() == order_ ? 2 * t - 1 : 2 * t;
}

std::string CirculantSpec::to_string() const
{
    std::string out = "C" + std::to_string(order_) + "(";
    for (std::size_t i = 0; i < connections_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(connections_[i]);
    }
    return out + ")";
}

Graph build_circulant(const CirculantSpec& spec)
{
    const int n = spec.order();
    if (n > kMaxOrder)
        throw std::invalid_argument(spec.to_string() + " has more than " + std::to_string(kMaxOrder) + " vertices");
    std::vector<VertexMask> adjacency(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int s : spec.connections()) {
            adjacency[static_cast<std::size_t>(i)] |= bit((i + s) % n);
            adjacency[static_cast<std::size_t>(i)] |= bit((i - s + n) % n);
        }
    return Graph::from_adjacency(std::move(adjacency));
}

ComponentDecomposition decompose(const CirculantSpec& spec)
{
    int g = spec.order();
    for (int s : spec.connections())
        g = std::gcd(g, s);
    std::vector<int> reduced;
    reduced.reserve(spec.connections().size());
    for (int s : spec.connections())
        reduced.push_back(s / g);
    return {g, CirculantSpec(spec.order() / g, std::move(reduced))};
}

bool is_connected(const CirculantSpec& spec) { return decompose(spec).copies == 1; }

CirculantSpec multiply(const CirculantSpec& spec, int k)
{
    const int n = spec.order();
    if (n > 1 && std::gcd(((k % n) + n) % n, n) != 1)
        throw std::invalid_argument(std::to_string(k) + " is not a unit mod " + std::to_string(n));
    std::vector<int> out;
    out.reserve(spec.connections().size());
    for (int s : spec.connections()) {
        const long long r = ((static_cast<long long>(k) * s) % n + n) % n;
        out.push_back(static_cast<int>(std::min<long long>(r, n - r)));
    }
    return CirculantSpec::normalized(n, std::move(out));
}

std::vector<int> multiplier_units(int n)
{
    std::vector<int> out{1};
    for (int k = 2; 2 * k <= n; ++k)
        if (std::gcd(k, n) == 1)
            out.push_back(k);
    return out;
}

std::optional<int> multiplier_isomorphic(const CirculantSpec& a, const CirculantSpec& b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("multiplier isomorphism needs equal orders");
    if (a.size() != b.size())
        return std::nullopt;
    const int n = a.order();
    for (int k = 1; k < std::max(n, 2); ++k)
        if (std::gcd(k, n) == 1 && multiply(a, k) == b)
            return k;
    return std::nullopt;
}

bool is_bipartite(const CirculantSpec& spec)
{
    const auto [copies, reduced] = decompose(spec);
    if (reduced.order() % 2 != 0)
        return false;
    return std::all_of(reduced.connections().begin(), reduced.connections().end(),
                       [](int s) { return s % 2 == 1; });
}

} // namespace circforce
