#pragma once

#include "stsys/partition.hpp"
#include "stsys/profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stsys {

/// Sources of catstsys bounds.
enum class Rule {
    ZeroDimension,        // a point has catstsys 0
    DimensionCap,         // no admissible partition is longer
    FundamentalClass,     // (n) is categorical on an orientable manifold
    CupLength,            // Gromov: a nonzero top product is a categorical partition
    CupWitness,           // coarsenings of a nonzero top product
    MaximalCupLength,     // catstsys = cup length = floor(n / lpd)
    ProductSum,           // product of maximal cup length factors: at least the sum
    ModConditionProduct,  // two maximal cup length factors under the MOD condition: exactly the sum
    SphereProduct,        // product of real homology spheres: the number of spheres
    Divergence,           // partitions ruled out by a rescaled factor family
};

std::string to_string(Rule r);

enum class PartitionStatus { Categorical, RuledOut, Unknown };

std::string to_string(PartitionStatus s);

struct PartitionVerdict {
    Partition partition;
    PartitionStatus status = PartitionStatus::Unknown;
    std::string reason;
    std::optional<int> divergence_exponent;  // ratio growth t^w under the witness family
};

struct Bound {
    enum class Kind { Lower, Upper, Exact };
    Kind kind;
    int value;
    Rule rule;
    std::string detail;
};

struct RuleNote {
    Rule rule;
    std::string reason;
};

/// Invariants: lower <= upper; exact iff lower == upper.
struct CategoryVerdict {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::vector<Bound> bounds;           // every applicable rule
    std::vector<RuleNote> inapplicable;  // rules that were considered and failed
    std::vector<PartitionVerdict> partitions;
    bool partitions_complete = true;     // false when partition analysis was skipped for size

    /// Rules whose bounds attain the final lower or upper value.
    std::vector<Rule> provenance() const;
    bool applied(Rule r) const;
    const RuleNote* note(Rule r) const;
};

/// Admissible partitions with categorical / ruled-out / unknown verdicts.
std::vector<PartitionVerdict> partition_verdicts(const DimensionProfile& p);

/// Combines every applicable rule into lower and upper bounds.
CategoryVerdict catstsys_bounds(const DimensionProfile& p);

/// Largest dimension handled by the partition-level analysis.
inline constexpr int kPartitionDimensionLimit = 32;

}  // namespace stsys
