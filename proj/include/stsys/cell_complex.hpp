#pragma once

#include "stsys/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace stsys {

enum class ComplexKind { Simplicial, Cubical, General };

std::string_view to_string(ComplexKind kind);
ComplexKind parse_complex_kind(std::string_view text);

/// Degrees of the two factor cells a product cell was built from.
struct FactorTag {
    int first = 0;
    int second = 0;
    bool operator==(const FactorTag&) const = default;
};

struct MatrixEntry {
    std::size_t row;
    long value;
};

/**
 * Column-sparse integer matrix. Column j holds the nonzero (row, value)
 * pairs sorted by row; for a boundary matrix the rows are (q-1)-cells and
 * the columns q-cells.
 */
class SparseIntMatrix {
public:
    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    std::span<const MatrixEntry> column(std::size_t j) const { return columns_.at(j); }

    long at(std::size_t row, std::size_t col) const;

    /// Accumulates value into (row, col); entries that cancel to zero are dropped.
    void add(std::size_t row, std::size_t col, long value);

    SparseIntMatrix operator*(const SparseIntMatrix& rhs) const;
    bool is_zero() const;
    std::size_t nonzeros() const;

private:
    std::size_t rows_ = 0;
    std::vector<std::vector<MatrixEntry>> columns_;
};

struct Cell {
    std::string id;
    Rational weight;
    std::vector<int> vertices;        // simplicial cells only, increasing order
    std::optional<FactorTag> factor;  // set by product_complex
};

/**
 * Finite graded cell complex with integer incidences and positive rational
 * volumes. The volumes play the role of a piecewise-linear metric: a q-cell
 * of weight w contributes w per unit coefficient to the mass of a q-chain.
 *
 * Invariants checked on construction: every weight is positive, boundary
 * matrices have matching shapes, consecutive boundaries compose to zero and,
 * for simplicial complexes, each q-cell lists q+1 increasing vertices with
 * the alternating-sign face pattern as its boundary.
 */
class WeightedCellComplex {
public:
    WeightedCellComplex(ComplexKind kind, std::vector<std::vector<Cell>> cells,
                        std::vector<SparseIntMatrix> boundaries);

    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    ComplexKind kind() const { return kind_; }

    /// Number of q-cells; zero outside [0, top_dim].
    std::size_t num_cells(int q) const;
    std::size_t total_cells() const;

    const std::vector<Cell>& cells(int q) const;
    const Cell& cell(int q, std::size_t i) const { return cells(q).at(i); }
    const Rational& weight(int q, std::size_t i) const { return cell(q, i).weight; }

    /// The stored boundary ∂_q : C_q → C_{q-1}, 1 <= q <= top_dim.
    const SparseIntMatrix& boundary_matrix(int q) const;

    std::optional<std::size_t> find_cell(int q, std::string_view id) const;

    /// Index of the simplex with the given (sorted) vertex set, if present.
    std::optional<std::size_t> find_simplex(const std::vector<int>& vertices) const;

    bool has_factor_tags() const;

    /// Same cells and incidences, new weights (validated positive).
    WeightedCellComplex with_weights(const std::vector<std::vector<Rational>>& weights) const;

private:
    ComplexKind kind_;
    std::vector<std::vector<Cell>> cells_;
    std::vector<SparseIntMatrix> boundaries_;  // index q holds ∂_q; index 0 unused
    std::vector<std::unordered_map<std::string, std::size_t>> id_index_;
    std::map<std::vector<int>, std::size_t> simplex_index_;
};

/**
 * Incremental construction by cell index. Faces must be added before the
 * cells whose boundary refers to them.
 */
class ComplexBuilder {
public:
    explicit ComplexBuilder(ComplexKind kind) : kind_(kind) {}

    std::size_t add_cell(int q, std::string id, Rational weight,
                         const std::vector<std::pair<std::size_t, long>>& boundary,
                         std::vector<int> vertices = {},
                         std::optional<FactorTag> factor = std::nullopt);

    /// Adds a simplex on increasing vertices; its faces must already exist.
    std::size_t add_simplex(std::vector<int> vertices, Rational weight);

    /// Adds the simplex and any missing faces; faces get weight 1.
    std::size_t add_simplex_closure(std::vector<int> vertices, Rational weight,
                                    const Rational& face_weight = Rational(1));

    std::size_t num_cells(int q) const;

    WeightedCellComplex build() &&;

private:
    void ensure_degree(int q);

    ComplexKind kind_;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::vector<std::vector<std::pair<std::size_t, long>>>> columns_;
    std::map<std::vector<int>, std::size_t> simplices_;
};

/// A cellular chain with rational coefficients; integral chains are the
/// special case of integer-valued coefficients.
struct Chain {
    int degree = 0;
    std::vector<Rational> coefficients;

    bool is_zero() const;
    bool is_integral() const;

    Chain& operator+=(const Chain& rhs);
    Chain& operator-=(const Chain& rhs);
    Chain& operator*=(const Rational& s);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Rational& s, Chain a) { return a *= s; }
    bool operator==(const Chain&) const = default;
};

Chain zero_chain(const WeightedCellComplex& k, int q);
Chain cell_chain(const WeightedCellComplex& k, int q, std::size_t index, const Rational& coefficient = 1);

/// Checks degree range and coefficient length against the complex.
void validate_chain(const WeightedCellComplex& k, const Chain& c);

/// ∂c; the boundary of a 0-chain is the empty (-1)-chain.
Chain boundary(const WeightedCellComplex& k, const Chain& c);
bool is_cycle(const WeightedCellComplex& k, const Chain& c);

/// Σ |c_i| · weight_i.
Rational mass(const Chain& c, const WeightedCellComplex& k);

const SparseIntMatrix& boundary_matrix(const WeightedCellComplex& k, int q);

/**
 * Cell-wise product. Cells are pairs (a, b) with deg = deg a + deg b,
 * weight(a × b) = weight(a) · weight(b), and boundary
 * ∂(a × b) = ∂a × b + (-1)^{deg a} a × ∂b. Every product cell carries the
 * factor tag (deg a, deg b). A one-point factor is the identity.
 */
WeightedCellComplex product_complex(const WeightedCellComplex& k, const WeightedCellComplex& l);

/// Index of the product cell a × b inside product_complex(k, l).
std::size_t product_cell_index(const WeightedCellComplex& k, const WeightedCellComplex& l,
                               int deg_a, std::size_t a, int deg_b, std::size_t b);

/// Cross product of chains, a chain on product_complex(k, l).
Chain cross_product(const WeightedCellComplex& k, const WeightedCellComplex& l,
                    const Chain& s, const Chain& t);

enum class RescaleMode {
    Uniform,      // q-cells scale by t^q
    FirstFactor,  // product cells tagged (a, b) scale by t^a
};

/**
 * Metric rescaling. Scaling a metric by t² scales q-volumes by t^q; the
 * first-factor mode realises the product metric t²G_X + G_Y on X × Y.
 */
WeightedCellComplex rescale(const WeightedCellComplex& k, const Rational& t,
                            RescaleMode mode = RescaleMode::Uniform);

/// One-parameter family of product weights with the first factor stretched.
class DeformationFamily {
public:
    explicit DeformationFamily(WeightedCellComplex base);

    const WeightedCellComplex& base() const { return base_; }
    WeightedCellComplex at(const Rational& t) const;

private:
    WeightedCellComplex base_;
};

}  // namespace stsys
