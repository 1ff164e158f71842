#include <circforce/biadjacency.hpp>
#include <circforce/circulant_matrices.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace circforce {

std::vector<int> biadjacency_exponents(const CirculantSpec& spec)
{
    if (!is_connected(spec) || !is_bipartite(spec))
        throw std::invalid_argument(spec.to_string() + " is not a connected bipartite circulant");
    const int n = spec.order() / 2;
    std::vector<int> out;
    for (int s : spec.connections()) {
        out.push_back((s - 1) / 2);
        out.push_back((n - (s + 1) / 2) % n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RationalMatrix shift_power_sum(int n, std::span<const int> exponents)
{
    RationalMatrix sum(n, n);
    for (int e : exponents)
        sum += shift_power(n, e);
    return sum;
}

RationalMatrix biadjacency(const CirculantSpec& spec)
{
    const auto exponents = biadjacency_exponents(spec);
    return shift_power_sum(spec.order() / 2, exponents);
}

RationalMatrix biadjacency_from_graph(const Graph& g)
{
    if (g.order() % 2 != 0)
        throw std::invalid_argument("parity biadjacency needs an even order");
    const int n = g.order() / 2;
    RationalMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (g.adjacent(2 * j + 1, 2 * i))
                m(j, i) = 1;
    return m;
}

std::optional<SequentialForm> sequential_normalize(std::span<const int> exponents, int n)
{
    if (n < 1)
        throw std::invalid_argument("modulus must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int e : exponents) {
        const int r = ((e % n) + n) % n;
        if (seen[static_cast<std::size_t>(r)])
            throw std::invalid_argument("exponents are not distinct residues");
        seen[static_cast<std::size_t>(r)] = true;
    }
    if (exponents.empty())
        return std::nullopt;
    const int t = static_cast<int>(exponents.size()) - 1;
    for (int a = 1; a < std::max(n, 2); ++a) {
        if (std::gcd(a, n) != 1)
            continue;
        for (int b = 0; b < n; ++b) {
            const bool sequential = std::all_of(exponents.begin(), exponents.end(), [&](int e) {
                const long long image = ((static_cast<long long>(a) * e + b) % n + n) % n;
                return image <= t;
            });
            if (sequential)
                return SequentialForm{a, b, t};
        }
    }
    return std::nullopt;
}

} // namespace circforce
