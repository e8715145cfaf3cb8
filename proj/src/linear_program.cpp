#include "stsys/linear_program.hpp"

#include <string>

namespace stsys {

void LinearProgram::add_constraint(SparseRow row, Rational b)
{
    for (const auto& [col, coeff] : row)
        if (col >= num_variables)
            throw InputError("constraint refers to variable " + std::to_string(col) + " of " +
                             std::to_string(num_variables));
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
}

namespace {

class Tableau {
public:
    explicit Tableau(const LinearProgram& lp) : n_(lp.num_variables), width_(lp.num_variables + lp.rows.size())
    {
        const std::size_t m = lp.rows.size();
        rows_.assign(m, std::vector<Rational>(width_));
        rhs_.resize(m);
        basis_.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            const bool flip = lp.rhs[i] < 0;
            for (const auto& [col, coeff] : lp.rows[i])
                rows_[i][col] += flip ? Rational(-coeff) : coeff;
            rhs_[i] = flip ? Rational(-lp.rhs[i]) : lp.rhs[i];
            rows_[i][n_ + i] = 1;
            basis_[i] = n_ + i;
        }
    }

    /// Phase one: drive the artificial variables to zero. False if infeasible.
    bool find_feasible_basis()
    {
        obj_.assign(width_, Rational(0));
        obj_rhs_ = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t k = 0; k < n_; ++k)
                if (rows_[i][k] != 0)
                    obj_[k] -= rows_[i][k];
            obj_rhs_ -= rhs_[i];
        }
        enterable_ = width_;
        optimize();
        if (obj_rhs_ != 0)
            return false;

        // Pivot zero-level artificials out of the basis; rows where that is
        // impossible are linear combinations of the others.
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (basis_[i] < n_) {
                keep.push_back(i);
                continue;
            }
            std::size_t col = n_;
            for (std::size_t k = 0; k < n_; ++k)
                if (rows_[i][k] != 0) {
                    col = k;
                    break;
                }
            if (col < n_) {
                pivot(i, col);
                keep.push_back(i);
            }
        }
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        std::vector<std::size_t> basis;
        for (auto i : keep) {
            rows_[i].resize(n_);
            rows.push_back(std::move(rows_[i]));
            rhs.push_back(std::move(rhs_[i]));
            basis.push_back(basis_[i]);
        }
        rows_ = std::move(rows);
        rhs_ = std::move(rhs);
        basis_ = std::move(basis);
        width_ = n_;
        return true;
    }

    LpStatus minimize(const std::vector<Rational>& cost)
    {
        obj_.assign(cost.begin(), cost.end());
        obj_rhs_ = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0)
                continue;
            for (std::size_t k = 0; k < width_; ++k)
                if (rows_[i][k] != 0)
                    obj_[k] -= cb * rows_[i][k];
            obj_rhs_ -= cb * rhs_[i];
        }
        enterable_ = n_;
        return optimize();
    }

    Rational value() const { return -obj_rhs_; }

    std::vector<Rational> solution() const
    {
        std::vector<Rational> x(n_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            x[basis_[i]] = rhs_[i];
        return x;
    }

    std::size_t pivots() const { return pivots_; }

private:
    LpStatus optimize()
    {
        bool bland = false;
        while (true) {
            std::size_t enter = width_;
            for (std::size_t k = 0; k < enterable_; ++k) {
                if (obj_[k] >= 0)
                    continue;
                if (bland) {
                    enter = k;
                    break;
                }
                if (enter == width_ || obj_[k] < obj_[enter])
                    enter = k;
            }
            if (enter == width_)
                return LpStatus::Optimal;

            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& a = rows_[i][enter];
                if (a <= 0)
                    continue;
                Rational ratio = rhs_[i] / a;
                if (leave == rows_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    best = std::move(ratio);
                    leave = i;
                }
            }
            if (leave == rows_.size())
                return LpStatus::Unbounded;
            bland = rhs_[leave] == 0;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        ++pivots_;
        auto& prow = rows_[r];
        const Rational inv = 1 / prow[c];
        std::vector<std::size_t> support;
        for (std::size_t k = 0; k < width_; ++k)
            if (prow[k] != 0) {
                prow[k] *= inv;
                support.push_back(k);
            }
        rhs_[r] *= inv;

        auto eliminate = [&](std::vector<Rational>& row, Rational& rhs) {
            if (row[c] == 0)
                return;
            const Rational f = row[c];
            for (auto k : support)
                row[k] -= f * prow[k];
            if (rhs_[r] != 0)
                rhs -= f * rhs_[r];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r)
                eliminate(rows_[i], rhs_[i]);
        eliminate(obj_, obj_rhs_);
        basis_[r] = c;
    }

    std::size_t n_;
    std::size_t width_;
    std::size_t enterable_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> obj_;
    Rational obj_rhs_;
    std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp)
{
    if (lp.cost.size() != lp.num_variables || lp.rhs.size() != lp.rows.size())
        throw InputError("linear program has inconsistent dimensions");
    Tableau t(lp);
    LpSolution out;
    if (!t.find_feasible_basis()) {
        out.status = LpStatus::Infeasible;
        out.pivots = t.pivots();
        return out;
    }
    out.status = t.minimize(lp.cost);
    out.pivots = t.pivots();
    if (out.status == LpStatus::Optimal) {
        out.value = t.value();
        out.x = t.solution();
    }
    return out;
}

}  // namespace stsys
