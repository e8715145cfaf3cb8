#include <doctest.h>

#include "stsys/category.hpp"
#include "stsys/homology.hpp"
#include "stsys/standard_complexes.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace stsys;
namespace lib = stsys::library;

namespace {

/// Number of partitions of n into admissible parts, by the coin-change recurrence.
long long partition_count(int n, const std::set<int>& degrees)
{
    std::vector<long long> ways(n + 1, 0);
    ways[0] = 1;
    for (int d : degrees)
        for (int s = d; s <= n; ++s)
            ways[s] += ways[s - d];
    return ways[n];
}

/// Block sums of every set partition, by restricted growth strings.
std::set<std::vector<int>> set_partition_sums(const std::vector<int>& parts)
{
    std::set<std::vector<int>> out;
    const std::size_t n = parts.size();
    std::vector<std::size_t> label(n, 0);
    while (true) {
        std::size_t blocks = *std::max_element(label.begin(), label.end()) + 1;
        std::vector<int> sums(blocks, 0);
        for (std::size_t i = 0; i < n; ++i)
            sums[label[i]] += parts[i];
        std::sort(sums.begin(), sums.end());
        out.insert(sums);
        // Next restricted growth string: label[i] <= 1 + max(label[0..i-1]).
        std::size_t i = n;
        while (i-- > 1) {
            const std::size_t prefix_max = *std::max_element(label.begin(), label.begin() + i);
            if (label[i] <= prefix_max) {
                ++label[i];
                std::fill(label.begin() + i + 1, label.end(), 0);
                break;
            }
        }
        if (i == 0)
            break;
    }
    return out;
}

const PartitionVerdict& verdict_for(const std::vector<PartitionVerdict>& all, const Partition& p)
{
    for (const auto& v : all)
        if (v.partition == p)
            return v;
    FAIL("partition " << p.to_string() << " not enumerated");
    return all.front();
}

bool has_rule(const std::vector<Rule>& rules, Rule r)
{
    return std::find(rules.begin(), rules.end(), r) != rules.end();
}

DimensionProfile random_sphere_product(std::mt19937& rng, int max_factors)
{
    std::uniform_int_distribution<int> count(1, max_factors);
    std::uniform_int_distribution<int> dim(1, 6);
    std::bernoulli_distribution seal(0.3);
    DimensionProfile p = sphere_profile(dim(rng));
    const int k = count(rng);
    for (int i = 1; i < k; ++i) {
        p = kunneth_product(p, sphere_profile(dim(rng)));
        if (seal(rng))
            p.sealed = true;
    }
    return p;
}

}  // namespace

TEST_CASE("partition accessors")
{
    const Partition p({2, 1, 1, 3});
    CHECK(p.parts() == std::vector<int>{1, 1, 2, 3});
    CHECK(p.total() == 7);
    CHECK(p.size() == 4);
    CHECK(p.duplicated_number(1) == 2);
    CHECK(p.duplicated_number(4) == 0);
    CHECK(p.to_string() == "(1,1,2,3)");
    CHECK(Partition::parse("(3, 1,2)") == Partition({1, 2, 3}));
    CHECK(Partition::parse("1 1 1") == Partition({1, 1, 1}));
    CHECK_THROWS_AS(Partition({}), InputError);
    CHECK_THROWS_AS(Partition({1, 0}), InputError);
    CHECK_THROWS_AS(Partition::parse("1,a"), InputError);
    CHECK_THROWS_AS(Partition::parse(""), InputError);
}

TEST_CASE("enumerate_partitions examples")
{
    CHECK(enumerate_partitions(3, {1, 2, 3}) ==
          std::vector<Partition>{Partition({1, 1, 1}), Partition({1, 2}), Partition({3})});
    CHECK(enumerate_partitions(5, {2, 3, 5}) == std::vector<Partition>{Partition({2, 3}), Partition({5})});
    CHECK(enumerate_partitions(4, {2}) == std::vector<Partition>{Partition({2, 2})});
    CHECK(enumerate_partitions(4, {}).empty());
    CHECK(enumerate_partitions(3, {2}).empty());
    CHECK_THROWS_AS(enumerate_partitions(0, {1}), InputError);
}

TEST_CASE("enumerate_partitions agrees with the counting recurrence")
{
    std::mt19937 rng(5);
    std::bernoulli_distribution keep(0.5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 18;
        std::set<int> degrees;
        for (int d = 1; d <= n; ++d)
            if (keep(rng))
                degrees.insert(d);
        const auto all = enumerate_partitions(n, degrees);
        CHECK(static_cast<long long>(all.size()) == partition_count(n, degrees));
        CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].total() == n);
            CHECK(std::is_sorted(all[i].parts().begin(), all[i].parts().end()));
            for (int d : all[i].parts())
                CHECK(degrees.count(d) == 1);
            if (i > 0)
                CHECK(all[i - 1].size() >= all[i].size());
        }
        CHECK(enumerate_partitions(n, degrees) == all);
    }
}

TEST_CASE("coarsenings match set-partition enumeration")
{
    CHECK(coarsenings({1, 1}) == std::set<Partition>{Partition({1, 1}), Partition({2})});
    CHECK(coarsenings({2, 3}) == std::set<Partition>{Partition({2, 3}), Partition({5})});
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> len(1, 7);
    std::uniform_int_distribution<int> part(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> parts(len(rng));
        for (auto& x : parts)
            x = part(rng);
        std::set<Partition> expected;
        for (const auto& s : set_partition_sums(parts))
            expected.insert(Partition(s));
        CHECK(coarsenings(parts) == expected);
    }
}

TEST_CASE("Kunneth products of profiles")
{
    const auto s2s3 = kunneth_product(sphere_profile(2), sphere_profile(3));
    CHECK(s2s3.dimension == 5);
    CHECK(s2s3.betti == std::vector<int>{1, 0, 1, 1, 0, 1});
    CHECK(lpd(s2s3) == 2);
    CHECK(s2s3.max_cup == true);

    const auto t2 = kunneth_product(sphere_profile(1), sphere_profile(1));
    CHECK(t2.betti == std::vector<int>{1, 2, 1});
    CHECK(lpd(t2) == 1);
    CHECK(t2.max_cup == true);

    CHECK(kunneth_product(sphere_profile(1), sphere_profile(2)).max_cup == false);
    CHECK(kunneth_product(sphere_profile(1), sphere_profile(3)).max_cup == false);
    CHECK(kunneth_product(sphere_profile(2), sphere_profile(2)).max_cup == true);

    DimensionProfile unknown;
    unknown.name = "M4";
    unknown.dimension = 4;
    unknown.betti = {1, 0, 2, 0, 1};
    CHECK_FALSE(kunneth_product(unknown, sphere_profile(2)).max_cup.has_value());
    CHECK(kunneth_product(unknown, kunneth_product(sphere_profile(1), sphere_profile(2))).max_cup == false);
}

TEST_CASE("profile products keep Euler characteristic and total Betti number multiplicative")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_sphere_product(rng, 3);
        const auto b = random_sphere_product(rng, 3);
        const auto ab = kunneth_product(a, b);
        auto chi = [](const DimensionProfile& p) {
            int s = 0;
            for (int q = 0; q <= p.dimension; ++q)
                s += (q % 2 == 0 ? 1 : -1) * p.betti[q];
            return s;
        };
        auto total = [](const DimensionProfile& p) { return std::accumulate(p.betti.begin(), p.betti.end(), 0); };
        CHECK(chi(ab) == chi(a) * chi(b));
        CHECK(total(ab) == total(a) * total(b));
        CHECK(lpd(ab) == std::min(*lpd(a), *lpd(b)));
        CHECK(leaves(ab).size() == leaves(a).size() + leaves(b).size());
    }
}

TEST_CASE("product expressions")
{
    const auto flat = parse_product_expression("S1 x S2 x S7");
    CHECK(flat.dimension == 10);
    CHECK(flat.factors.size() == 3);
    CHECK(flat.name == "S1 x S2 x S7");

    const auto grouped = parse_product_expression("(S2 x S2) x S3");
    REQUIRE(grouped.factors.size() == 2);
    CHECK(grouped.factors[0].sealed);
    CHECK(grouped.factors[0].max_cup == true);
    CHECK(leaves(grouped).size() == 3);

    CHECK(parse_product_expression("S2\xC3\x97S3").betti == std::vector<int>{1, 0, 1, 1, 0, 1});
    CHECK(parse_product_expression("S^2 * S^3").dimension == 5);
    CHECK(parse_product_expression("T3").betti == std::vector<int>{1, 3, 3, 1});
    CHECK(parse_product_expression("(S4)").homology_sphere);

    for (const char* bad : {"S0", "Q2", "S2 x", "(S2 x S3", "S2 S3", "", "S99999"})
        CHECK_THROWS_AS(parse_product_expression(bad), InputError);
}

TEST_CASE("profile JSON")
{
    const auto p = parse_product_expression("(S2 x S2) x S3");
    const auto back = parse_profile_json(profile_to_json(p));
    CHECK(back.betti == p.betti);
    CHECK(back.max_cup == p.max_cup);
    CHECK(back.cup_witness == p.cup_witness);

    const auto e = parse_profile_json(R"({"expression": "S1 x S3"})");
    CHECK(e.dimension == 4);

    const auto m = parse_profile_json(R"({"dimension": 4, "betti": [1, 0, 2, 0, 1], "name": "M"})");
    CHECK(m.orientable);
    CHECK_FALSE(m.homology_sphere);
    CHECK_FALSE(m.max_cup.has_value());

    const auto s = parse_profile_json(R"({"dimension": 3, "betti": [1, 0, 0, 1]})");
    CHECK(s.homology_sphere);
    CHECK(s.max_cup == true);

    const auto f = parse_profile_json(R"({"factors": [{"expression": "S2"}, {"dimension": 3, "betti": [1,0,0,1]}]})");
    CHECK(f.betti == std::vector<int>{1, 0, 1, 1, 0, 1});

    CHECK_THROWS_AS(parse_profile_json(R"({"dimension": 2, "betti": [2, 0, 1]})"), InputError);
    CHECK_THROWS_AS(parse_profile_json(R"({"dimension": 2, "betti": [1, 0, 0], "orientable": true})"), InputError);
    CHECK_THROWS_AS(parse_profile_json(R"({"dimension": 2, "betti": [1, 1]})"), InputError);
    CHECK_THROWS_AS(parse_profile_json(R"({"dimension": 2, "betti": [1, 2, 1], "homology_sphere": true})"),
                    InputError);
    CHECK_THROWS_AS(parse_profile_json(R"({"dimension": 2, "betti": [1, 0, 1], "witness": [1, 1]})"), InputError);
    CHECK_THROWS_AS(parse_profile_json("{nope"), InputError);
    CHECK_THROWS_AS(parse_profile_json(R"({"betti": [1]})"), InputError);
}

TEST_CASE("MOD condition arithmetic")
{
    CHECK(mod_condition(4, 2, 3, 3));
    CHECK(mod_condition(1, 1, 2, 2));
    CHECK_FALSE(mod_condition(3, 2, 3, 2));
    CHECK_THROWS_AS(mod_condition(3, 0, 3, 2), InputError);
}

TEST_CASE("catstsys of spheres and their products")
{
    for (int m = 1; m <= 7; ++m) {
        const auto v = catstsys_bounds(sphere_profile(m));
        CHECK(v.exact);
        CHECK(v.lower == 1);
    }

    const auto s2s3 = catstsys_bounds(parse_product_expression("S2 x S3"));
    CHECK(s2s3.exact);
    CHECK(s2s3.lower == 2);
    CHECK(has_rule(s2s3.provenance(), Rule::MaximalCupLength));

    const auto grouped = catstsys_bounds(parse_product_expression("(S2 x S2) x S3"));
    CHECK(grouped.exact);
    CHECK(grouped.lower == 3);
    CHECK(has_rule(grouped.provenance(), Rule::ModConditionProduct));

    const auto s1s2 = catstsys_bounds(parse_product_expression("S1 x S2"));
    CHECK(s1s2.exact);
    CHECK(s1s2.lower == 2);
    CHECK(has_rule(s1s2.provenance(), Rule::SphereProduct));
    CHECK_FALSE(s1s2.applied(Rule::ModConditionProduct));
    REQUIRE(s1s2.note(Rule::ModConditionProduct) != nullptr);
    CHECK(s1s2.note(Rule::ModConditionProduct)->reason.find("lacks maximal") != std::string::npos);
    CHECK_FALSE(s1s2.applied(Rule::MaximalCupLength));

    for (const auto& [expr, count] : std::vector<std::pair<std::string, int>>{
             {"S1 x S3", 2}, {"S2 x S2 x S7", 3}, {"S1 x S2 x S7", 3}, {"T3", 3}, {"S3 x S5 x S1 x S1", 4}}) {
        const auto v = catstsys_bounds(parse_product_expression(expr));
        CHECK_MESSAGE(v.exact, expr);
        CHECK_MESSAGE(v.lower == count, expr);
        CHECK_MESSAGE(has_rule(v.provenance(), Rule::SphereProduct), expr);
    }
}

TEST_CASE("catstsys reports gaps instead of forcing exactness")
{
    const auto m = parse_profile_json(R"({"dimension": 4, "betti": [1, 0, 2, 0, 1], "name": "M"})");
    const auto v = catstsys_bounds(m);
    CHECK(v.lower == 1);
    CHECK(v.upper == 2);
    CHECK_FALSE(v.exact);
    CHECK(verdict_for(v.partitions, Partition({2, 2})).status == PartitionStatus::Unknown);
    CHECK(verdict_for(v.partitions, Partition({4})).status == PartitionStatus::Categorical);

    DimensionProfile point;
    point.name = "pt";
    const auto p = catstsys_bounds(point);
    CHECK(p.exact);
    CHECK(p.lower == 0);
}

TEST_CASE("partition verdict examples")
{
    const auto t2 = partition_verdicts(torus_profile(2));
    CHECK(verdict_for(t2, Partition({1, 1})).status == PartitionStatus::Categorical);

    const auto s1s2 = partition_verdicts(parse_product_expression("S1 x S2"));
    const auto& ruled = verdict_for(s1s2, Partition({1, 1, 1}));
    CHECK(ruled.status == PartitionStatus::RuledOut);
    CHECK(ruled.divergence_exponent == 2);
    CHECK(verdict_for(s1s2, Partition({1, 2})).status == PartitionStatus::Categorical);

    const auto s2s3 = partition_verdicts(parse_product_expression("S2 x S3"));
    CHECK(verdict_for(s2s3, Partition({5})).status == PartitionStatus::Categorical);
    CHECK(verdict_for(s2s3, Partition({2, 3})).status == PartitionStatus::Categorical);
}

TEST_CASE("sphere products are exact at the number of spheres")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_sphere_product(rng, 5);
        const auto v = catstsys_bounds(p);
        CHECK_MESSAGE(v.exact, p.name);
        CHECK_MESSAGE(v.lower == static_cast<int>(leaves(p).size()), p.name);
    }
}

TEST_CASE("product lower bound dominates the factor bounds")
{
    std::mt19937 rng(78);
    std::uniform_int_distribution<int> torus_dim(1, 3);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<DimensionProfile> factors{random_sphere_product(rng, 2), torus_profile(torus_dim(rng)),
                                              random_sphere_product(rng, 2)};
        factors.resize(2 + trial % 2);
        DimensionProfile p = factors[0];
        if (p.is_product())
            p.sealed = true;
        for (std::size_t i = 1; i < factors.size(); ++i) {
            DimensionProfile f = factors[i];
            if (f.is_product())
                f.sealed = true;
            p = kunneth_product(p, f);
        }
        bool all_max = true;
        int sum = 0;
        for (const auto& f : p.factors) {
            all_max = all_max && f.max_cup == true;
            sum += catstsys_bounds(f).lower;
        }
        if (!all_max)
            continue;
        CHECK(catstsys_bounds(p).lower >= sum);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("category verdict invariants")
{
    std::vector<DimensionProfile> profiles;
    for (const char* e : {"S1", "S1 x S2", "S2 x S3", "(S2 x S2) x S3", "T4", "T2 x S2", "S1 x S1 x S4",
                          "(S1 x S2) x S3", "S3 x S3 x S3", "(T2 x S3) x (S2 x S2)"})
        profiles.push_back(parse_product_expression(e));
    profiles.push_back(parse_profile_json(R"({"dimension": 4, "betti": [1, 0, 2, 0, 1]})"));
    profiles.push_back(parse_profile_json(R"({"dimension": 6, "betti": [1, 0, 1, 0, 1, 0, 1], "max_cup": true})"));
    profiles.push_back(parse_profile_json(R"({"dimension": 2, "betti": [1, 0, 0], "orientable": false})"));

    for (const auto& p : profiles) {
        const auto v = catstsys_bounds(p);
        CHECK_MESSAGE(v.lower <= v.upper, p.name);
        CHECK(v.exact == (v.lower == v.upper));
        if (p.cup_length && p.orientable)
            CHECK(*p.cup_length <= v.upper);
        const auto l = lpd(p);
        for (const auto& pv : v.partitions) {
            if (pv.status != PartitionStatus::Categorical)
                continue;
            for (int d : pv.partition.parts())
                CHECK(p.betti_at(d) > 0);
            CHECK(static_cast<int>(pv.partition.size()) <= v.upper);
            if (p.max_cup == true)
                CHECK(static_cast<int>(pv.partition.size()) <= p.dimension / *l);
        }
    }
}

TEST_CASE("profiles agree with triangulated and cellular complexes")
{
    const auto t2 = profile_from_complex(lib::torus9(), "torus9");
    CHECK(t2.betti == torus_profile(2).betti);
    CHECK(t2.max_cup == true);
    CHECK(catstsys_bounds(t2).lower == 2);
    CHECK(catstsys_bounds(t2).exact);

    const auto t3 = profile_from_complex(lib::simplicial_torus(3), "T3");
    CHECK(t3.betti == torus_profile(3).betti);
    CHECK(t3.cup_length == 3);
    CHECK(catstsys_bounds(t3).lower == 3);

    const auto s3 = profile_from_complex(lib::sphere(3), "S3");
    CHECK(s3.homology_sphere);
    CHECK(catstsys_bounds(s3).lower == 1);

    const auto rp2 = profile_from_complex(lib::rp2(), "rp2");
    CHECK_FALSE(rp2.orientable);
    CHECK(catstsys_bounds(rp2).upper == 0);

    const auto s1s2 = profile_from_complex(product_complex(lib::circle(3), lib::cubical_sphere(2)), "S1xS2");
    CHECK(s1s2.betti == parse_product_expression("S1 x S2").betti);
    CHECK_FALSE(s1s2.max_cup.has_value());
}
