#pragma once

#include "stsys/cell_complex.hpp"
#include "stsys/homology.hpp"

#include <optional>
#include <vector>

namespace stsys {

/// Rational cochain: one value per q-cell.
struct Cochain {
    int degree = 0;
    std::vector<Rational> values;

    bool is_zero() const;

    Cochain& operator+=(const Cochain& rhs);
    Cochain& operator*=(const Rational& s);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator*(const Rational& s, Cochain a) { return a *= s; }
    bool operator==(const Cochain&) const = default;
};

Cochain zero_cochain(const WeightedCellComplex& k, int q);

/// ⟨φ, c⟩ = Σ φ_i c_i.
Rational evaluate(const Cochain& phi, const Chain& c);

/// (δφ)(σ) = φ(∂σ); the coboundary of a top-degree cochain is empty.
Cochain coboundary(const WeightedCellComplex& k, const Cochain& phi);
bool is_cocycle(const WeightedCellComplex& k, const Cochain& phi);

/**
 * Front-face/back-face product on a simplicial complex:
 * (α∪β)[v0..v_{p+q}] = α[v0..vp] · β[vp..v_{p+q}], vertices in stored order.
 * Throws InputError on a non-simplicial complex.
 */
Cochain cup_product(const WeightedCellComplex& k, const Cochain& alpha, const Cochain& beta);

/**
 * Cocycles φ_1..φ_b in degree q with ⟨φ_i, g_j⟩ = δ_ij against the homology
 * generators. Their classes form a basis of H^q(K;Q).
 */
struct CohomologyBasis {
    std::vector<std::vector<Cochain>> cocycles;  // indexed by degree

    std::size_t dimension(int q) const;
};

CohomologyBasis cohomology_basis(const WeightedCellComplex& k, const HomologySummary& h);

/// Coordinates of the class of a cocycle in the dual basis: φ(g_j).
std::vector<Rational> cohomology_coordinates(const WeightedCellComplex& k, const HomologySummary& h,
                                             const Cochain& phi);

/// Σ coordinates_j · φ_j.
Cochain cohomology_representative(const WeightedCellComplex& k, const CohomologyBasis& basis, int q,
                                  const std::vector<Rational>& coordinates);

/// Least q >= 1 with nonzero rational (co)homology; empty when there is none.
std::optional<int> lpd(const HomologySummary& h);

struct CupLengthResult {
    int cup_length = 0;
    std::vector<int> witness_degrees;  // degrees of a longest nonzero product
};

/**
 * Longest nonzero product of positive-degree classes, through the filtration
 * A_1 = H^{>0}, A_{k+1} = span(A_k ∪ A_1).
 */
CupLengthResult cup_length(const WeightedCellComplex& k);

struct RingProfile {
    int dimension = 0;
    std::optional<int> lpd;
    int cup_length = 0;
    bool maximal_cup_length = false;
    std::vector<int> witness_degrees;  // a nonzero top-degree product of r classes, when maximal
};

/**
 * maximal_cup_length holds when some product of r = floor(n / lpd) positive
 * degree classes is nonzero in degree n = top_dim.
 */
RingProfile ring_profile(const WeightedCellComplex& k);

}  // namespace stsys
