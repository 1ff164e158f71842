#include <circforce/matrix.hpp>

namespace circforce {

template <>
int rank(ExactMatrix<Rational> m)
{
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(cols)));
    for (int i = 0; i < rows; ++i) {
        Integer scale = 1;
        for (int j = 0; j < cols; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (int j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).get_num() * (scale / m(i, j).get_den());
    }

    int r = 0;
    Integer previous = 1;
    Integer t;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && sgn(a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)]) == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
        const auto& pivot_row = a[static_cast<std::size_t>(r)];
        const Integer& pivot = pivot_row[static_cast<std::size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            const Integer factor = row[static_cast<std::size_t>(c)];
            for (int j = c + 1; j < cols; ++j) {
                auto& x = row[static_cast<std::size_t>(j)];
                t = pivot * x - factor * pivot_row[static_cast<std::size_t>(j)];
                mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        previous = pivot;
        ++r;
    }
    return r;
}

QuadMatrix lift(const RationalMatrix& m)
{
    QuadMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out(i, j) = QuadScalar(m(i, j));
    return out;
}

} // namespace circforce
