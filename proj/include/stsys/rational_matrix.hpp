#pragma once

#include "stsys/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace stsys {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    std::vector<Rational> operator*(const std::vector<Rational>& x) const;
    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

/// Basis of { x : m·x = 0 }, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Some x with m·x = b, or nothing if the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

}  // namespace stsys
