#include "stsys/experiment.hpp"

#include "stsys/homology.hpp"
#include "stsys/stable_norm.hpp"

#include <map>
#include <regex>
#include <sstream>

namespace stsys {

Rational fundamental_class_mass(const WeightedCellComplex& k)
{
    const int n = k.top_dim();
    const auto h = homology(k);
    if (h.betti(n) != 1)
        throw PreconditionError("no fundamental class: betti_" + std::to_string(n) + " = " +
                                std::to_string(h.betti(n)));
    // There are no (n+1)-cells, so the generator is the only cycle in its class.
    return mass(h.at(n).generators.at(0), k);
}

std::string to_string(GrowthVerdict v)
{
    switch (v) {
    case GrowthVerdict::Bounded: return "bounded";
    case GrowthVerdict::Diverges: return "diverges";
    case GrowthVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string DeformationReport::evidence_note() const
{
    switch (verdict) {
    case GrowthVerdict::Diverges:
        return "ratio grows like t^" + std::to_string(*exponent) +
               " on this family, so " + partition.to_string() + " is not categorical here";
    case GrowthVerdict::Bounded:
        return "ratio does not grow on the sampled ladder; this is evidence only, other metrics are not explored";
    case GrowthVerdict::Inconclusive:
        return "step exponents disagree or are not integers on the tail";
    }
    return {};
}

std::vector<Rational> default_t_samples()
{
    return {Rational(1), Rational(2), Rational(4), Rational(8)};
}

std::optional<int> exact_exponent(const Rational& base, const Rational& ratio, int limit)
{
    if (base <= 0 || base == 1)
        throw InputError("exponent base must be positive and different from 1");
    if (ratio <= 0)
        return std::nullopt;
    // base^w is monotone in w, so walk from 0 toward the ratio.
    const bool up = (ratio > 1) == (base > 1);
    if (ratio == 1)
        return 0;
    Rational power = 1;
    for (int w = 1; w <= limit; ++w) {
        power = up ? Rational(power * base) : Rational(power / base);
        if (power == ratio)
            return up ? w : -w;
        if ((ratio > 1 && power > ratio) || (ratio < 1 && power < ratio))
            return std::nullopt;
    }
    return std::nullopt;
}

namespace {

void analyze(DeformationReport& r)
{
    r.step_exponents.clear();
    for (std::size_t j = 0; j + 1 < r.rows.size(); ++j)
        r.step_exponents.push_back(
            exact_exponent(r.rows[j + 1].t / r.rows[j].t, r.rows[j + 1].ratio / r.rows[j].ratio));
    r.exponent.reset();
    r.verdict = GrowthVerdict::Inconclusive;
    const std::size_t steps = r.step_exponents.size();
    if (steps == 0)
        return;
    const std::size_t tail = (steps + 1) / 2;
    const auto w = r.step_exponents.back();
    for (std::size_t j = steps - tail; j < steps; ++j)
        if (!r.step_exponents[j] || r.step_exponents[j] != w)
            return;
    r.exponent = w;
    r.verdict = *w >= 1 ? GrowthVerdict::Diverges : GrowthVerdict::Bounded;
}

void validate_samples(const std::vector<Rational>& ts)
{
    if (ts.empty())
        throw InputError("at least one t sample is required");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] < 1)
            throw InputError("t samples must be >= 1, got " + to_string(ts[i]));
        if (i > 0 && ts[i] <= ts[i - 1])
            throw InputError("t samples must be strictly increasing");
    }
}

std::optional<int> least_positive_degree(const HomologySummary& h)
{
    for (int q = 1; q <= h.top_dim(); ++q)
        if (h.betti(q) > 0)
            return q;
    return std::nullopt;
}

}  // namespace

DeformationReport deformation_sweep(const DeformationFamily& family, const Partition& partition,
                                    const std::vector<Rational>& t_samples, int search_radius)
{
    validate_samples(t_samples);
    const auto& base = family.base();
    const int n = base.top_dim();
    if (partition.total() != n)
        throw InputError("partition " + partition.to_string() + " does not sum to the dimension " +
                         std::to_string(n));
    const auto h = homology(base);
    if (h.betti(n) != 1)
        throw PreconditionError("the product complex has no fundamental class");
    for (int d : partition.parts())
        if (h.betti(d) == 0)
            throw PreconditionError("part " + std::to_string(d) + " has trivial stable systole");

    DeformationReport report{partition, {}, {}, std::nullopt, GrowthVerdict::Inconclusive, true};
    for (const auto& t : t_samples) {
        const auto k = family.at(t);
        // Weights change with t but cells do not, so the base homology is reused.
        std::map<int, Rational> by_degree;
        for (int d : partition.parts()) {
            if (by_degree.count(d))
                continue;
            const auto s = stable_systole(k, h, d, search_radius);
            if (s.status == SearchStatus::BoundedSearch)
                report.certified = false;
            by_degree[d] = *s.value;
        }
        DeformationRow row{t, {}, 1, 0, 0};
        for (int d : partition.parts()) {
            row.systoles.push_back(by_degree.at(d));
            row.product *= by_degree.at(d);
        }
        row.volume = mass(h.at(n).generators.at(0), k);
        row.ratio = row.product / row.volume;
        report.rows.push_back(std::move(row));
    }
    analyze(report);
    return report;
}

std::optional<int> predicted_exponent(const WeightedCellComplex& x, const WeightedCellComplex& y,
                                      const Partition& partition)
{
    const auto ly = least_positive_degree(homology(y));
    int low = 0;
    for (int d : partition.parts()) {
        if (ly && d >= *ly)
            return std::nullopt;
        low += d;
    }
    return low - x.top_dim();
}

std::optional<Rational> predicted_ratio(const WeightedCellComplex& x, const WeightedCellComplex& y,
                                        const Partition& partition, const Rational& t)
{
    const auto w = predicted_exponent(x, y, partition);
    if (!w)
        return std::nullopt;
    const auto hx = homology(x);
    Rational product = 1;
    for (int d : partition.parts()) {
        const auto s = stable_systole(x, hx, d);
        if (s.is_trivial())
            throw PreconditionError("part " + std::to_string(d) + " has trivial stable systole on X");
        product *= *s.value;
    }
    return pow(t, *w) * product / (fundamental_class_mass(x) * fundamental_class_mass(y));
}

std::string to_csv(const DeformationReport& report)
{
    std::ostringstream out;
    out << "t";
    const auto& parts = report.partition.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        out << ",part" << i + 1 << "_q" << parts[i];
    out << ",product,volume,ratio\n";
    for (const auto& row : report.rows) {
        out << to_string(row.t);
        for (const auto& s : row.systoles)
            out << ',' << to_string(s);
        out << ',' << to_string(row.product) << ',' << to_string(row.volume) << ',' << to_string(row.ratio)
            << '\n';
    }
    return out.str();
}

DeformationReport parse_csv(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        return cells;
    };
    if (!std::getline(in, line))
        throw InputError("empty CSV report");
    const auto header = split(line);
    if (header.size() < 5 || header.front() != "t" || header[header.size() - 3] != "product" ||
        header[header.size() - 2] != "volume" || header.back() != "ratio")
        throw InputError("unexpected CSV header '" + line + "'");
    const std::regex part_column(R"(part(\d+)_q(\d+))");
    std::vector<int> degrees;
    for (std::size_t c = 1; c + 3 < header.size(); ++c) {
        std::smatch m;
        if (!std::regex_match(header[c], m, part_column) || std::stoul(m[1]) != c)
            throw InputError("unexpected CSV column '" + header[c] + "'");
        degrees.push_back(std::stoi(m[2]));
    }
    DeformationReport report{Partition(degrees), {}, {}, std::nullopt, GrowthVerdict::Inconclusive, true};
    if (report.partition.parts() != degrees)
        throw InputError("CSV part columns are not in non-decreasing degree order");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto cells = split(line);
        if (cells.size() != header.size())
            throw InputError("CSV row has " + std::to_string(cells.size()) + " fields, expected " +
                             std::to_string(header.size()));
        DeformationRow row;
        row.t = parse_rational(cells[0]);
        for (std::size_t c = 1; c + 3 < cells.size(); ++c)
            row.systoles.push_back(parse_rational(cells[c]));
        row.product = parse_rational(cells[cells.size() - 3]);
        row.volume = parse_rational(cells[cells.size() - 2]);
        row.ratio = parse_rational(cells.back());
        report.rows.push_back(std::move(row));
    }
    analyze(report);
    return report;
}

}  // namespace stsys
