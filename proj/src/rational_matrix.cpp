#include "stsys/rational_matrix.hpp"

#include <utility>

namespace stsys {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols)
{
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw InputError("matrix shapes do not compose");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (rhs(k, j) != 0)
                    out(i, j) += a * rhs(k, j);
        }
    return out;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& x) const
{
    if (x.size() != cols_)
        throw InputError("matrix and vector shapes do not compose");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && x[j] != 0)
                out[i] += (*this)(i, j) * x[j];
    return out;
}

RowEchelon row_reduce(RationalMatrix m)
{
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0)
                    m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m)
{
    return row_reduce(m).pivots.size();
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m)
{
    const RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> x(m.cols());
        x[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            x[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b)
{
    if (b.size() != m.rows())
        throw InputError("right-hand side has the wrong length");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    std::vector<Rational> x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

}  // namespace stsys
