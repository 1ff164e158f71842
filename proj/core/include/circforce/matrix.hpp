#pragma once

#include <circforce/graph.hpp>
#include <circforce/quad_scalar.hpp>
#include <circforce/rational.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace circforce {

/// Dense row-major matrix over an exact field (Rational or QuadScalar).
template <typename T>
class ExactMatrix {
public:
    ExactMatrix() = default;

    ExactMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("matrix dimensions must be nonnegative");
    }

    ExactMatrix(int rows, int cols, std::vector<T> entries) : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (rows < 0 || cols < 0 || entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
            throw std::invalid_argument("entry count does not match matrix dimensions");
    }

    static ExactMatrix identity(int n)
    {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static ExactMatrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
        ExactMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw std::invalid_argument("ragged rows");
            for (int j = 0; j < c; ++j)
                m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    /// Assembles a block matrix; every block in a block-row shares a height and every
    /// block in a block-column shares a width.
    static ExactMatrix from_blocks(const std::vector<std::vector<ExactMatrix>>& blocks)
    {
        if (blocks.empty())
            return {};
        std::vector<int> heights, widths;
        for (const auto& row : blocks)
            heights.push_back(row.front().rows());
        for (const auto& b : blocks.front())
            widths.push_back(b.cols());
        int total_rows = 0, total_cols = 0;
        for (int h : heights)
            total_rows += h;
        for (int w : widths)
            total_cols += w;

        ExactMatrix m(total_rows, total_cols);
        int r0 = 0;
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            if (blocks[bi].size() != widths.size())
                throw std::invalid_argument("ragged block rows");
            int c0 = 0;
            for (std::size_t bj = 0; bj < widths.size(); ++bj) {
                const auto& b = blocks[bi][bj];
                if (b.rows() != heights[bi] || b.cols() != widths[bj])
                    throw std::invalid_argument("block dimensions do not line up");
                for (int i = 0; i < b.rows(); ++i)
                    for (int j = 0; j < b.cols(); ++j)
                        m(r0 + i, c0 + j) = b(i, j);
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(int i, int j) { return entries_[index(i, j)]; }
    const T& operator()(int i, int j) const { return entries_[index(i, j)]; }

    ExactMatrix transpose() const
    {
        ExactMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const
    {
        if (!square())
            return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i)))
                    return false;
        return true;
    }

    bool is_zero() const
    {
        for (const auto& x : entries_)
            if (!circforce::is_zero(x))
                return false;
        return true;
    }

    bool has_zero_entry() const
    {
        for (const auto& x : entries_)
            if (circforce::is_zero(x))
                return true;
        return false;
    }

    ExactMatrix block(int r0, int c0, int rs, int cs) const
    {
        ExactMatrix b(rs, cs);
        for (int i = 0; i < rs; ++i)
            for (int j = 0; j < cs; ++j)
                b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    ExactMatrix operator-() const
    {
        ExactMatrix m = *this;
        for (auto& x : m.entries_)
            x = T(-x);
        return m;
    }

    ExactMatrix& operator+=(const ExactMatrix& o)
    {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] += o.entries_[k];
        return *this;
    }

    ExactMatrix& operator-=(const ExactMatrix& o)
    {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] -= o.entries_[k];
        return *this;
    }

    ExactMatrix& operator*=(const T& s)
    {
        for (auto& x : entries_)
            x *= s;
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const T& s) { return a *= s; }
    friend ExactMatrix operator*(const T& s, ExactMatrix a) { return a *= s; }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product dimension mismatch");
        ExactMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (circforce::is_zero(aik))
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    if (!circforce::is_zero(b(k, j)))
                        c(i, j) += T(aik * b(k, j));
            }
        return c;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t index(int i, int j) const
    {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }

    void require_same_shape(const ExactMatrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> entries_;
};

using RationalMatrix = ExactMatrix<Rational>;
using QuadMatrix = ExactMatrix<QuadScalar>;

/// Fraction-free elimination over the field T: each update is
///   m(i,j) <- (pivot * m(i,j) - m(i,c) * m(r,j)) / previous_pivot,
/// an exact division. Pivots are the first nonzero entry found scanning down the column.
template <typename T>
int rank(ExactMatrix<T> m)
{
    int r = 0;
    T previous(1);
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (int j = c; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        for (int i = r + 1; i < m.rows(); ++i) {
            for (int j = c + 1; j < m.cols(); ++j)
                m(i, j) = T((m(r, c) * m(i, j) - m(i, c) * m(r, j)) / previous);
            m(i, c) = T(0);
        }
        previous = m(r, c);
        ++r;
    }
    return r;
}

/// Rational matrices are scaled row-wise to integers and eliminated with exact integer
/// (Bareiss) division, so intermediate entries stay integral.
template <>
int rank(ExactMatrix<Rational> m);

/// Textbook Gauss-Jordan elimination with field division; an independent route to rank().
template <typename T>
int rank_gauss(ExactMatrix<T> m)
{
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        for (int j = 0; j < m.cols(); ++j)
            std::swap(m(p, j), m(r, j));
        const T inv = T(T(1) / m(r, c));
        for (int j = c; j < m.cols(); ++j)
            m(r, j) = T(m(r, j) * inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            const T factor = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                m(i, j) = T(m(i, j) - factor * m(r, j));
        }
        ++r;
    }
    return r;
}

template <typename T>
int nullity(const ExactMatrix<T>& m)
{
    return m.cols() - rank(m);
}

QuadMatrix lift(const RationalMatrix& m);

/// Graph on the rows of a square symmetric matrix with i ~ j iff m(i, j) != 0 for i != j.
/// Throws std::invalid_argument for non-square, asymmetric or oversized input.
template <typename T>
Graph pattern_graph(const ExactMatrix<T>& m)
{
    if (!m.is_symmetric())
        throw std::invalid_argument("pattern_graph needs a square symmetric matrix");
    if (m.rows() > kMaxOrder)
        throw std::invalid_argument("matrix too large for a pattern graph");
    std::vector<VertexMask> adjacency(static_cast<std::size_t>(m.rows()), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && !is_zero(m(i, j)))
                adjacency[static_cast<std::size_t>(i)] |= bit(j);
    return Graph::from_adjacency(std::move(adjacency));
}

/// Simultaneous row and column relabeling: entry (i, j) moves to (new_label[i], new_label[j]).
template <typename T>
ExactMatrix<T> permuted(const ExactMatrix<T>& m, std::span<const int> new_label)
{
    if (!m.square() || static_cast<int>(new_label.size()) != m.rows())
        throw std::invalid_argument("relabeling must cover every row of a square matrix");
    std::vector<bool> seen(new_label.size(), false);
    for (int v : new_label) {
        if (v < 0 || v >= m.rows() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("relabeling is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    ExactMatrix<T> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out(new_label[static_cast<std::size_t>(i)], new_label[static_cast<std::size_t>(j)]) = m(i, j);
    return out;
}

} // namespace circforce
