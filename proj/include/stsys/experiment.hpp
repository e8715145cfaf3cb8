#pragma once

#include "stsys/cell_complex.hpp"
#include "stsys/partition.hpp"
#include "stsys/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stsys {

/**
 * Mass of the fundamental class: the unique integral top cycle generating
 * H_n. PreconditionError unless betti_n = 1.
 */
Rational fundamental_class_mass(const WeightedCellComplex& k);

struct DeformationRow {
    Rational t;
    std::vector<Rational> systoles;  // one per part, in partition order
    Rational product;
    Rational volume;
    Rational ratio;  // product / volume
    bool operator==(const DeformationRow&) const = default;
};

enum class GrowthVerdict { Bounded, Diverges, Inconclusive };

std::string to_string(GrowthVerdict v);

/**
 * Invariants: t strictly increasing and >= 1; ratio > 0; Diverges implies
 * exponent >= 1 and every tail step satisfies
 * ratio[j+1] / ratio[j] = (t[j+1] / t[j])^exponent exactly.
 */
struct DeformationReport {
    Partition partition;
    std::vector<DeformationRow> rows;
    std::vector<std::optional<int>> step_exponents;  // one per consecutive pair
    std::optional<int> exponent;                     // common value on the tail
    GrowthVerdict verdict = GrowthVerdict::Inconclusive;
    bool certified = true;  // false if some systole came from a bounded search

    /// A divergent family rules the partition out on this family only.
    std::string evidence_note() const;
};

/// Default t-ladder 1, 2, 4, 8.
std::vector<Rational> default_t_samples();

/**
 * ρ(t) for the family at each sample. Preconditions: samples strictly
 * increasing and >= 1, partition sums to the top dimension, every part has
 * betti > 0, the complex has a fundamental class.
 */
DeformationReport deformation_sweep(const DeformationFamily& family, const Partition& partition,
                                    const std::vector<Rational>& t_samples = default_t_samples(),
                                    int search_radius = 5);

/// Integer w with base^w = ratio, searched in [-limit, limit]; base > 0, base != 1.
std::optional<int> exact_exponent(const Rational& base, const Rational& ratio, int limit = 256);

/**
 * Factor-wise prediction for X × Y stretched along X when every part lies
 * below lpd(Y): ρ(t) = t^{Σd - dim X} Π stsys_d(X) / (mass[X] · mass[Y]).
 * Empty when some part reaches lpd(Y).
 */
std::optional<Rational> predicted_ratio(const WeightedCellComplex& x, const WeightedCellComplex& y,
                                        const Partition& partition, const Rational& t);

/// Σd - dim X over the parts below lpd(Y); empty when the prediction does not apply.
std::optional<int> predicted_exponent(const WeightedCellComplex& x, const WeightedCellComplex& y,
                                      const Partition& partition);

/// Columns: t, one per part (part<i>_q<d>), product, volume, ratio.
std::string to_csv(const DeformationReport& report);

/// Rows and partition back from to_csv output.
DeformationReport parse_csv(std::string_view text);

}  // namespace stsys
