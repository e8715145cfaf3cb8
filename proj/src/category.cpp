#include "stsys/category.hpp"

#include <algorithm>
#include <stdexcept>

namespace stsys {

std::string to_string(Rule r)
{
    switch (r) {
    case Rule::ZeroDimension: return "zero-dimension";
    case Rule::DimensionCap: return "dimension-cap";
    case Rule::FundamentalClass: return "fundamental-class";
    case Rule::CupLength: return "cup-length";
    case Rule::CupWitness: return "cup-witness";
    case Rule::MaximalCupLength: return "maximal-cup-length";
    case Rule::ProductSum: return "product-sum";
    case Rule::ModConditionProduct: return "mod-condition-product";
    case Rule::SphereProduct: return "sphere-product";
    case Rule::Divergence: return "divergence";
    }
    return "unknown";
}

std::string to_string(PartitionStatus s)
{
    switch (s) {
    case PartitionStatus::Categorical: return "categorical";
    case PartitionStatus::RuledOut: return "ruled-out";
    case PartitionStatus::Unknown: return "unknown";
    }
    return "unknown";
}

std::vector<Rule> CategoryVerdict::provenance() const
{
    std::vector<Rule> out;
    for (const auto& b : bounds) {
        const bool attains = (b.kind != Bound::Kind::Upper && b.value == lower) ||
                             (b.kind != Bound::Kind::Lower && b.value == upper);
        if (attains && std::find(out.begin(), out.end(), b.rule) == out.end())
            out.push_back(b.rule);
    }
    return out;
}

bool CategoryVerdict::applied(Rule r) const
{
    return std::any_of(bounds.begin(), bounds.end(), [r](const Bound& b) { return b.rule == r; });
}

const RuleNote* CategoryVerdict::note(Rule r) const
{
    for (const auto& n : inapplicable)
        if (n.rule == r)
            return &n;
    return nullptr;
}

namespace {

constexpr std::size_t kMaxLeavesForSplits = 16;

/// Degrees of a nonzero top-degree product of positive-degree classes, if one is known.
std::optional<std::vector<int>> top_product_witness(const DimensionProfile& p)
{
    if (p.dimension < 1 || !p.orientable)
        return std::nullopt;
    std::optional<std::vector<int>> best = p.cup_witness;
    if (p.is_product()) {
        // Künneth: cross products of nonzero top products are nonzero.
        std::vector<int> joined;
        bool complete = true;
        for (const auto& f : p.factors) {
            const auto w = top_product_witness(f);
            if (!w) {
                complete = false;
                break;
            }
            joined.insert(joined.end(), w->begin(), w->end());
        }
        if (complete && (!best || joined.size() > best->size()))
            best = std::move(joined);
    }
    if (!best)
        best = std::vector<int>{p.dimension};
    return best;
}

struct Split {
    int exponent;
    std::string description;
};

/**
 * Rescaling the factor X of X × Y by t keeps the parts below lpd(Y) in X,
 * so their systoles grow like t^d while the volume grows like t^dim(X).
 * Returns the largest exponent over all splits of the prime factors.
 */
std::optional<Split> divergence(const Partition& part, const std::vector<DimensionProfile>& primes)
{
    const std::size_t count = primes.size();
    if (count < 2 || count > kMaxLeavesForSplits)
        return std::nullopt;
    std::optional<Split> best;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << count); ++mask) {
        int dim_x = 0;
        std::optional<int> lpd_y;
        std::string x_name;
        std::string y_name;
        for (std::size_t i = 0; i < count; ++i) {
            if (mask & (std::size_t{1} << i)) {
                dim_x += primes[i].dimension;
                x_name += (x_name.empty() ? "" : " x ") + primes[i].name;
            } else {
                const auto l = lpd(primes[i]);
                if (l && (!lpd_y || *l < *lpd_y))
                    lpd_y = l;
                y_name += (y_name.empty() ? "" : " x ") + primes[i].name;
            }
        }
        int low = 0;
        for (int d : part.parts())
            if (!lpd_y || d < *lpd_y)
                low += d;
        const int w = low - dim_x;
        if (w > 0 && (!best || w > best->exponent))
            best = Split{w, "rescaling " + x_name + " against " + y_name + ": parts below lpd " +
                                (lpd_y ? std::to_string(*lpd_y) : std::string("inf")) + " sum to " +
                                std::to_string(low) + " > " + std::to_string(dim_x)};
    }
    return best;
}

std::string join_degrees(const std::vector<int>& v)
{
    return Partition(v).to_string();
}

}  // namespace

std::vector<PartitionVerdict> partition_verdicts(const DimensionProfile& p)
{
    p.validate();
    std::vector<PartitionVerdict> out;
    if (p.dimension < 1 || p.dimension > kPartitionDimensionLimit)
        return out;
    const auto admissible = admissible_degrees(p);

    std::set<Partition> categorical;
    std::string witness_text;
    if (const auto w = top_product_witness(p)) {
        categorical = coarsenings(*w);
        witness_text = join_degrees(*w);
        for (const auto& c : categorical)
            for (int d : c.parts())
                if (!admissible.count(d))
                    throw InputError("profile '" + p.name + "' has a nonzero product in degree " +
                                     std::to_string(d) + " but betti(" + std::to_string(d) + ") = 0");
    }
    const auto primes = leaves(p);

    for (auto& part : enumerate_partitions(p.dimension, admissible)) {
        PartitionVerdict v{std::move(part), PartitionStatus::Unknown, {}, std::nullopt};
        if (categorical.count(v.partition)) {
            v.status = PartitionStatus::Categorical;
            v.reason = v.partition.size() == 1 ? "fundamental class"
                                               : "coarsening of the nonzero top product " + witness_text;
        } else if (const auto split = p.orientable ? divergence(v.partition, primes) : std::nullopt) {
            v.status = PartitionStatus::RuledOut;
            v.divergence_exponent = split->exponent;
            v.reason = split->description;
        }
        out.push_back(std::move(v));
    }
    return out;
}

CategoryVerdict catstsys_bounds(const DimensionProfile& p)
{
    p.validate();
    CategoryVerdict v;
    using K = Bound::Kind;
    auto add = [&v](K kind, int value, Rule rule, std::string detail) {
        v.bounds.push_back(Bound{kind, value, rule, std::move(detail)});
    };
    auto skip = [&v](Rule rule, std::string reason) { v.inapplicable.push_back(RuleNote{rule, std::move(reason)}); };

    const int n = p.dimension;
    if (n == 0) {
        add(K::Exact, 0, Rule::ZeroDimension, "only the empty partition");
        v.exact = true;
        return v;
    }
    const auto l = lpd(p);
    const auto admissible = admissible_degrees(p);
    // Longest admissible partition, by a knapsack over part counts.
    std::vector<int> longest(n + 1, -1);
    longest[0] = 0;
    for (int s = 1; s <= n; ++s)
        for (int d : admissible)
            if (d <= s && longest[s - d] >= 0)
                longest[s] = std::max(longest[s], longest[s - d] + 1);
    const int cap = std::max(longest[n], 0);
    add(K::Upper, cap, Rule::DimensionCap,
        "largest admissible partition; floor(n/lpd) = " + (l ? std::to_string(n / *l) : std::string("0")));

    if (p.orientable)
        add(K::Lower, 1, Rule::FundamentalClass, "(" + std::to_string(n) + ") is categorical");
    if (p.orientable && p.cup_length && *p.cup_length > 0)
        add(K::Lower, *p.cup_length, Rule::CupLength, "real cup length " + std::to_string(*p.cup_length));

    if (p.max_cup && *p.max_cup && l)
        add(K::Exact, n / *l, Rule::MaximalCupLength,
            "floor(" + std::to_string(n) + "/" + std::to_string(*l) + ")");
    else
        skip(Rule::MaximalCupLength, p.max_cup ? "profile lacks maximal real cup length"
                                               : "maximal real cup length undetermined");

    if (p.is_product()) {
        int sum = 0;
        std::string failing;
        for (const auto& f : p.factors) {
            const auto lf = lpd(f);
            if (f.max_cup && *f.max_cup && lf)
                sum += f.dimension / *lf;
            else if (failing.empty())
                failing = f.name;
        }
        if (failing.empty())
            add(K::Lower, sum, Rule::ProductSum, "sum of factor cup lengths");
        else
            skip(Rule::ProductSum, "factor " + failing + " lacks maximal real cup length");

        if (p.factors.size() != 2) {
            skip(Rule::ModConditionProduct, "needs exactly two factors, found " + std::to_string(p.factors.size()));
        } else {
            const auto& m = p.factors[0];
            const auto& nn = p.factors[1];
            const auto lm = lpd(m);
            const auto ln = lpd(nn);
            if (!(m.max_cup && *m.max_cup && lm) || !(nn.max_cup && *nn.max_cup && ln)) {
                skip(Rule::ModConditionProduct, "a factor lacks maximal real cup length");
            } else if (!mod_condition(m.dimension, *lm, nn.dimension, *ln)) {
                skip(Rule::ModConditionProduct, "MOD(" + std::to_string(m.dimension) + "," + std::to_string(*lm) +
                                                    ") + MOD(" + std::to_string(nn.dimension) + "," +
                                                    std::to_string(*ln) + ") >= max lpd");
            } else if (!(p.max_cup && *p.max_cup)) {
                skip(Rule::ModConditionProduct,
                     "MOD condition holds but the product lacks maximal real cup length");
            } else {
                const int r = m.dimension / *lm;
                const int s = nn.dimension / *ln;
                add(K::Exact, r + s, Rule::ModConditionProduct,
                    std::to_string(r) + " + " + std::to_string(s) + " under the MOD condition");
            }
        }
    }

    const auto primes = leaves(p);
    const bool spheres = std::all_of(primes.begin(), primes.end(), [](const DimensionProfile& f) {
        return f.homology_sphere && f.dimension >= 1 && f.orientable;
    });
    if (spheres)
        add(K::Exact, static_cast<int>(primes.size()), Rule::SphereProduct,
            std::to_string(primes.size()) + " real homology sphere factor(s)");
    else
        skip(Rule::SphereProduct, "not a product of real homology spheres");

    if (n <= kPartitionDimensionLimit) {
        v.partitions = partition_verdicts(p);
        int best_categorical = 0;
        int best_open = 0;
        for (const auto& pv : v.partitions) {
            const int size = static_cast<int>(pv.partition.size());
            if (pv.status == PartitionStatus::Categorical)
                best_categorical = std::max(best_categorical, size);
            if (pv.status != PartitionStatus::RuledOut)
                best_open = std::max(best_open, size);
        }
        if (best_categorical > 0)
            add(K::Lower, best_categorical, Rule::CupWitness, "longest categorical partition");
        if (best_open < cap)
            add(K::Upper, best_open, Rule::Divergence, "longer admissible partitions diverge");
    } else {
        v.partitions_complete = false;
    }

    v.lower = 0;
    v.upper = cap;
    for (const auto& b : v.bounds) {
        if (b.kind != K::Upper)
            v.lower = std::max(v.lower, b.value);
        if (b.kind != K::Lower)
            v.upper = std::min(v.upper, b.value);
    }
    if (v.lower > v.upper)
        throw std::logic_error("catstsys bounds crossed for '" + p.name + "': " + std::to_string(v.lower) +
                               " > " + std::to_string(v.upper));
    v.exact = v.lower == v.upper;

    for (auto& pv : v.partitions)
        if (pv.status == PartitionStatus::Unknown && static_cast<int>(pv.partition.size()) > v.upper) {
            pv.status = PartitionStatus::RuledOut;
            pv.reason = "longer than the upper bound " + std::to_string(v.upper);
        }
    return v;
}

}  // namespace stsys
