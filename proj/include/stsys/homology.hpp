#pragma once

#include "stsys/cell_complex.hpp"
#include "stsys/rational.hpp"

#include <optional>
#include <vector>

namespace stsys {

/**
 * Integral homology in one degree.
 *
 * `generators` are integral cycles whose classes form a basis of
 * H_q(K;Z)/torsion; their images in H_q(K;Q) are the unit vectors of the
 * coordinate system used everywhere else (`lattice_basis`). The rows of
 * `coordinate_functionals` are integer linear forms on C_q that read off
 * those coordinates from any rational cycle.
 */
struct DegreeHomology {
    int degree = 0;
    std::size_t betti = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
    std::vector<Chain> generators;
    std::vector<Chain> torsion_generators;  // one per torsion coefficient
    std::vector<std::vector<Rational>> lattice_basis;
    std::vector<std::vector<Rational>> coordinate_functionals;
    std::size_t cycle_rank = 0;     // rank of Z_q
    std::size_t boundary_rank = 0;  // rank of B_q
};

struct HomologySummary {
    std::vector<DegreeHomology> degrees;

    int top_dim() const { return static_cast<int>(degrees.size()) - 1; }

    /// Betti number in degree q; zero outside the complex.
    std::size_t betti(int q) const;
    const std::vector<Integer>& torsion(int q) const;
    const DegreeHomology& at(int q) const;

    long euler_characteristic() const;
};

HomologySummary homology(const WeightedCellComplex& k);

/// A rational homology class in the lattice coordinates of `homology`.
struct HomologyClass {
    int degree = 0;
    std::vector<Rational> coordinates;
    std::optional<Chain> representative;

    bool is_zero() const;
};

/**
 * Coordinates of the rational class of the cycle z; the zero vector exactly
 * when z is a rational boundary. Throws InputError when z is not a cycle.
 */
std::vector<Rational> class_coordinates(const WeightedCellComplex& k, const HomologySummary& h,
                                        const Chain& z);
std::vector<Rational> class_coordinates(const WeightedCellComplex& k, const Chain& z);

/// Σ coordinates_i · generator_i.
Chain class_representative(const WeightedCellComplex& k, const HomologySummary& h, int q,
                           const std::vector<Rational>& coordinates);

}  // namespace stsys
