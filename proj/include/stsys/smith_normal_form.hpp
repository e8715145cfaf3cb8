#pragma once

#include "stsys/cell_complex.hpp"
#include "stsys/rational.hpp"

#include <cstddef>
#include <vector>

namespace stsys {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_sparse(const SparseIntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/**
 * M = U · D · V with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
 * all d_i > 0, followed by zeros. The inverses of U and V are kept alongside
 * because homology needs both directions of each change of basis.
 */
struct SmithForm {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    IntMatrix u_inverse;
    IntMatrix v_inverse;
    std::vector<Integer> invariant_factors;  // the r nonzero diagonal entries

    std::size_t rank() const { return invariant_factors.size(); }
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Determinant by fraction-free elimination; used to confirm unimodularity.
Integer determinant(const IntMatrix& m);

}  // namespace stsys
