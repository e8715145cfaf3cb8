#pragma once

#include "stsys/cell_complex.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stsys {

/**
 * Symbolic closed manifold: dimension, rational Betti numbers and ring-level
 * flags. A product keeps its factors; a sealed product is one parenthesised
 * group and counts as a single factor of any product containing it.
 *
 * Invariants: betti has n + 1 entries, betti[0] = 1, orientable implies
 * betti[n] = 1, homology_sphere implies betti is 1 at 0 and n and 0 between.
 */
struct DimensionProfile {
    std::string name;
    int dimension = 0;
    std::vector<int> betti{1};
    bool orientable = true;
    std::optional<bool> max_cup;           // maximal real cup length; empty when undetermined
    bool homology_sphere = false;
    std::optional<int> cup_length;
    std::optional<std::vector<int>> cup_witness;  // degrees of a nonzero top-degree product
    std::vector<DimensionProfile> factors;         // empty for a prime profile
    bool sealed = false;

    int betti_at(int q) const;
    bool is_product() const { return !factors.empty(); }

    /// Throws InputError when an invariant fails.
    void validate() const;
};

/// S^m with m >= 1.
DimensionProfile sphere_profile(int m);

/// Product of `dim` circles, sealed.
DimensionProfile torus_profile(int dim);

/// Least q >= 1 with betti(q) > 0; empty when there is none.
std::optional<int> lpd(const DimensionProfile& p);

/// Degrees q in [1, n] with betti(q) > 0.
std::set<int> admissible_degrees(const DimensionProfile& p);

/// MOD(m, lpd_m) + MOD(n, lpd_n) < max(lpd_m, lpd_n); throws InputError when an lpd is < 1.
bool mod_condition(int m, int lpd_m, int n, int lpd_n);

/**
 * Künneth product. Betti numbers convolve, flags combine and the maximal cup
 * length flag is derived when both factor flags are known: the product has it
 * iff both factors do, floor(m/lpd_M) = floor(m/l), floor(n/lpd_N) = floor(n/l)
 * and MOD(m,l) + MOD(n,l) < l with l = min(lpd_M, lpd_N).
 * Unsealed product operands contribute their factors, others themselves.
 */
DimensionProfile kunneth_product(const DimensionProfile& a, const DimensionProfile& b);

/// Prime factors in order, looking through sealed groups.
std::vector<DimensionProfile> leaves(const DimensionProfile& p);

/**
 * Product expressions such as "S1 x S2 x S7" or "(S2 x S2) x S3".
 * Factors: S<m>, T<n>, parenthesised groups; separators: x, X, *, ×.
 */
DimensionProfile parse_product_expression(std::string_view text);

/**
 * JSON profile: {"expression": "..."} or {"dimension", "betti", "orientable",
 * "max_cup", "homology_sphere", "cup_length", "witness", "name"} or
 * {"factors": [...]} with optional flag overrides.
 */
DimensionProfile parse_profile_json(std::string_view text);
std::string profile_to_json(const DimensionProfile& p);

/// Reads a file holding either a JSON profile or a product expression.
DimensionProfile load_profile(const std::string& path);

/// A profile from a triangulated or cellular complex; ring flags need a simplicial complex.
DimensionProfile profile_from_complex(const WeightedCellComplex& k, std::string name = "complex");

}  // namespace stsys
