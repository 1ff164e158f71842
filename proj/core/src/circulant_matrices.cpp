#include <circforce/circulant_matrices.hpp>

#include <stdexcept>

namespace circforce {

RationalMatrix shift_matrix(int n)
{
    if (n < 1)
        throw std::invalid_argument("shift matrix needs n >= 1");
    RationalMatrix p(n, n);
    for (int i = 0; i < n; ++i)
        p(i, (i + n - 1) % n) = 1;
    return p;
}

RationalMatrix shift_power(int n, int e)
{
    if (n < 1)
        throw std::invalid_argument("shift matrix needs n >= 1");
    const int shift = ((e % n) + n) % n;
    RationalMatrix p(n, n);
    for (int i = 0; i < n; ++i)
        p(i, (i - shift + n) % n) = 1;
    return p;
}

RationalMatrix circulant_hankel(std::span<const Rational> first_row)
{
    const int n = static_cast<int>(first_row.size());
    RationalMatrix h(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h(i, j) = first_row[static_cast<std::size_t>((i + j) % n)];
    return h;
}

HankelMatrix hankel(int n)
{
    if (n < 3)
        throw std::invalid_argument("hankel needs n >= 3");
    std::vector<Rational> row;
    Rational lambda = 0;
    Integer power = 1;
    for (int i = 0; i + 1 < n; ++i) {
        row.emplace_back(power);
        lambda += Rational(power * power);
        power *= 2;
    }
    // power is now 2^{n-1}; w uses 2^{n-2}.
    Rational w(Integer(-2 * (power / 2 - 1)), Integer(3));
    w.canonicalize();
    lambda += w * w;
    row.push_back(w);
    return {circulant_hankel(row), lambda};
}

OrthogonalHankel orthogonal_hankel(int n)
{
    const HankelMatrix h = hankel(n);
    auto field = make_quad_field(h.lambda);
    QuadMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = QuadScalar(0, Rational(h.matrix(i, j) / h.lambda), field);
    return {std::move(a), std::move(field)};
}

} // namespace circforce
