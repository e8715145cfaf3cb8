#include "stsys/smith_normal_form.hpp"

#include <utility>

namespace stsys {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_sparse(const SparseIntMatrix& s)
{
    IntMatrix m(s.rows(), s.cols());
    for (std::size_t j = 0; j < s.cols(); ++j)
        for (const auto& e : s.column(j))
            m(e.row, j) = e.value;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw InputError("matrix shapes do not compose");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (rhs(k, j) != 0)
                    out(i, j) += a * rhs(k, j);
        }
    return out;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

namespace {

/// Working state: p · m · q = d, with the inverses of p and q kept in step.
class Reducer {
public:
    explicit Reducer(const IntMatrix& m)
        : d(m),
          p(IntMatrix::identity(m.rows())),
          p_inv(IntMatrix::identity(m.rows())),
          q(IntMatrix::identity(m.cols())),
          q_inv(IntMatrix::identity(m.cols()))
    {}

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < d.cols(); ++c)
            std::swap(d(i, c), d(j, c));
        for (std::size_t c = 0; c < p.cols(); ++c)
            std::swap(p(i, c), p(j, c));
        for (std::size_t r = 0; r < p_inv.rows(); ++r)
            std::swap(p_inv(r, i), p_inv(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < d.rows(); ++r)
            std::swap(d(r, i), d(r, j));
        for (std::size_t r = 0; r < q.rows(); ++r)
            std::swap(q(r, i), q(r, j));
        for (std::size_t c = 0; c < q_inv.cols(); ++c)
            std::swap(q_inv(i, c), q_inv(j, c));
    }

    // row_i += c · row_j
    void add_row(std::size_t i, std::size_t j, const Integer& c)
    {
        for (std::size_t k = 0; k < d.cols(); ++k)
            if (d(j, k) != 0)
                d(i, k) += c * d(j, k);
        for (std::size_t k = 0; k < p.cols(); ++k)
            if (p(j, k) != 0)
                p(i, k) += c * p(j, k);
        for (std::size_t r = 0; r < p_inv.rows(); ++r)
            if (p_inv(r, i) != 0)
                p_inv(r, j) -= c * p_inv(r, i);
    }

    // col_i += c · col_j
    void add_col(std::size_t i, std::size_t j, const Integer& c)
    {
        for (std::size_t r = 0; r < d.rows(); ++r)
            if (d(r, j) != 0)
                d(r, i) += c * d(r, j);
        for (std::size_t r = 0; r < q.rows(); ++r)
            if (q(r, j) != 0)
                q(r, i) += c * q(r, j);
        for (std::size_t k = 0; k < q_inv.cols(); ++k)
            if (q_inv(i, k) != 0)
                q_inv(j, k) -= c * q_inv(i, k);
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t k = 0; k < d.cols(); ++k)
            d(i, k) = -d(i, k);
        for (std::size_t k = 0; k < p.cols(); ++k)
            p(i, k) = -p(i, k);
        for (std::size_t r = 0; r < p_inv.rows(); ++r)
            p_inv(r, i) = -p_inv(r, i);
    }

    IntMatrix d, p, p_inv, q, q_inv;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m)
{
    Reducer r(m);
    auto& d = r.d;
    const std::size_t rows = d.rows();
    const std::size_t cols = d.cols();
    std::vector<Integer> factors;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pi = rows, pj = cols;
        Integer best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (d(i, j) != 0 && (best == 0 || abs(d(i, j)) < best)) {
                    best = abs(d(i, j));
                    pi = i;
                    pj = j;
                }
        if (best == 0)
            break;
        r.swap_rows(t, pi);
        r.swap_cols(t, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (d(i, t) != 0) {
                    Integer quotient = d(i, t) / d(t, t);
                    if (quotient != 0)
                        r.add_row(i, t, -quotient);
                    clean = clean && d(i, t) == 0;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (d(t, j) != 0) {
                    Integer quotient = d(t, j) / d(t, t);
                    if (quotient != 0)
                        r.add_col(j, t, -quotient);
                    clean = clean && d(t, j) == 0;
                }
            if (!clean) {
                // A remainder survived: it is smaller than the pivot, so move it in.
                std::size_t bi = t, bj = t;
                Integer small = abs(d(t, t));
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (d(i, t) != 0 && abs(d(i, t)) < small) {
                        small = abs(d(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(t, j) != 0 && abs(d(t, j)) < small) {
                        small = abs(d(t, j));
                        bi = t;
                        bj = j;
                    }
                r.swap_rows(t, bi);
                r.swap_cols(t, bj);
                continue;
            }
            // Divisibility of the trailing block by the pivot.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            r.add_row(t, bad, 1);
        }
        if (d(t, t) < 0)
            r.negate_row(t);
        factors.push_back(d(t, t));
    }

    SmithForm out;
    out.d = std::move(r.d);
    out.u = std::move(r.p_inv);
    out.u_inverse = std::move(r.p);
    out.v = std::move(r.q_inv);
    out.v_inverse = std::move(r.q);
    out.invariant_factors = std::move(factors);
    return out;
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw InputError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap_with = i;
                    break;
                }
            if (swap_with == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(swap_with, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace stsys
