#include <circforce/circulant_matrices.hpp>
#include <circforce/constructions.hpp>
#include <circforce/witness_matrices.hpp>

#include <stdexcept>

namespace circforce {

namespace {

struct Blocks {
    QuadMatrix a, pa, b, pb, p, pt, i, o;
};

Blocks blocks(int n)
{
    if (n < 3)
        throw std::invalid_argument("torus witness matrices need n >= 3");
    Blocks k;
    k.a = orthogonal_hankel(n).matrix;
    k.p = lift(shift_matrix(n));
    k.pt = k.p.transpose();
    k.pa = k.p * k.a;
    k.b = k.a - k.pa;
    k.pb = k.p * k.b;
    k.i = QuadMatrix::identity(n);
    k.o = QuadMatrix(n, n);
    return k;
}

} // namespace

QuadMatrix witness_k4(int n)
{
    const Blocks k = blocks(n);
    return QuadMatrix::from_blocks({
        {k.a, k.i, k.o, k.pt},
        {k.i, k.b, k.i, k.o},
        {k.o, k.i, -k.pa, k.i},
        {k.p, k.o, k.i, -k.pb},
    });
}

QuadMatrix elimination_k4(int n)
{
    const Blocks k = blocks(n);
    return QuadMatrix::from_blocks({
        {k.i, -k.a, -k.pt, k.o},
        {k.o, k.i, k.o, k.o},
        {k.o, k.o, k.i, k.o},
        {k.o, -k.p, k.pb, k.i},
    });
}

QuadMatrix witness_k6(int n)
{
    const Blocks k = blocks(n);
    const QuadMatrix* diagonal[6] = {&k.a, &k.a, &k.a, &k.pa, &k.pa, &k.pa};
    std::vector<std::vector<QuadMatrix>> rows(6, std::vector<QuadMatrix>(6, k.o));
    for (int c = 0; c < 6; ++c) {
        rows[c][c] = *diagonal[c];
        if (c + 1 < 6) {
            rows[c][c + 1] = k.i;
            rows[c + 1][c] = k.i;
        }
    }
    rows[0][5] = k.pt;
    rows[5][0] = k.p;
    return QuadMatrix::from_blocks(rows);
}

QuadMatrix elimination_k6(int n)
{
    const Blocks k = blocks(n);
    std::vector<std::vector<QuadMatrix>> rows(6, std::vector<QuadMatrix>(6, k.o));
    for (int c = 0; c < 6; ++c)
        rows[c][c] = k.i;
    rows[0][1] = -k.a;
    rows[0][3] = k.a;
    rows[0][4] = -k.pt;
    rows[5][1] = -k.p;
    rows[5][2] = k.pa;
    rows[5][4] = -k.pa;
    return QuadMatrix::from_blocks(rows);
}

RationalMatrix witness_c913()
{
    const auto q = [](long p, long d = 1) { return make_rational(p, d); };
    return RationalMatrix::from_rows({
        {q(-1, 8), q(3, 4), q(-1, 2), q(1), q(0), q(0), q(0), q(1), q(0)},
        {q(3, 4), q(-2), q(1, 2), q(0), q(1), q(0), q(0), q(0), q(1)},
        {q(-1, 2), q(1, 2), q(-3, 4), q(0), q(0), q(1), q(1), q(0), q(0)},
        {q(1), q(0), q(0), q(48, 5), q(-12, 5), q(-24, 5), q(-16, 5), q(0), q(0)},
        {q(0), q(1), q(0), q(-12, 5), q(6, 5), q(4, 5), q(0), q(12, 5), q(0)},
        {q(0), q(0), q(1), q(-24, 5), q(4, 5), q(4, 5), q(0), q(0), q(-2, 5)},
        {q(0), q(0), q(1), q(-16, 5), q(0), q(0), q(-2, 5), q(-4, 5), q(-3, 5)},
        {q(1), q(0), q(0), q(0), q(12, 5), q(0), q(-4, 5), q(24, 5), q(6, 5)},
        {q(0), q(1), q(0), q(0), q(0), q(-2, 5), q(-3, 5), q(6, 5), q(-3, 10)},
    });
}

std::vector<int> block_to_torus_labels(int n, int copies)
{
    std::vector<int> labels(static_cast<std::size_t>(n * copies));
    for (int c = 0; c < copies; ++c)
        for (int r = 0; r < n; ++r)
            labels[static_cast<std::size_t>(c * n + r)] = c * n + (n - r) % n;
    return labels;
}

std::vector<int> block_to_circulant_labels(int n, int copies)
{
    const auto to_torus = block_to_torus_labels(n, copies);
    const auto to_circulant = torus_to_circulant_labels(n, copies);
    std::vector<int> labels(to_torus.size());
    for (std::size_t v = 0; v < labels.size(); ++v)
        labels[v] = to_circulant[static_cast<std::size_t>(to_torus[v])];
    return labels;
}

} // namespace circforce
