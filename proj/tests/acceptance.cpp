// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every comparison is exact rational arithmetic.

#include "cli.hpp"
#include "cycle_oracle.hpp"
#include "stsys/category.hpp"
#include "stsys/cohomology.hpp"
#include "stsys/experiment.hpp"
#include "stsys/stable_norm.hpp"
#include "stsys/standard_complexes.hpp"
#include "test_support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace stsys;
namespace lib = stsys::library;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Collects failures; the first one becomes the reported detail.
class Checker {
public:
    void require(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && failure_.empty())
            failure_ = what;
    }
    Outcome done(const std::string& summary) const
    {
        if (!failure_.empty())
            return {false, failure_};
        return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    }

private:
    int checks_ = 0;
    std::string failure_;
};

int run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "stsys");
    std::ostringstream sink;
    return cli::run(args, sink, sink);
}

Outcome zero_systole()
{
    Checker c;
    const std::vector<std::pair<std::string, WeightedCellComplex>> complexes = {
        {"point", lib::point()},
        {"circle(3)", lib::circle(3)},
        {"circle(5, 3/2)", lib::circle(5, Rational(3, 2))},
        {"cubical-circle(1)", lib::cubical_circle(1, 2)},
        {"cubical-circle(4)", lib::cubical_circle(4)},
        {"sphere(1)", lib::sphere(1)},
        {"sphere(2)", lib::sphere(2, 5)},
        {"sphere(3)", lib::sphere(3)},
        {"cubical-sphere(2)", lib::cubical_sphere(2)},
        {"cubical-sphere(3)", lib::cubical_sphere(3)},
        {"flat-torus(3)", lib::flat_torus(3, Rational(1, 3))},
        {"rp2", lib::rp2()},
        {"torus9", lib::torus9()},
        {"simplicial-torus(2)", lib::simplicial_torus(2)},
        {"simplicial-torus(3)", lib::simplicial_torus(3)},
        {"theta", lib::graph(2, {{0, 1}, {0, 1}, {0, 1}}, {1, 2, 3})},
    };
    for (const auto& [name, k] : complexes) {
        const auto s = stable_systole(k, 0);
        c.require(s.value && *s.value == 1, name + ": stsys_0 != 1");
    }
    c.require(run_cli({"systole", "lib:torus9", "-q", "0", "--expect", "1"}) == cli::kOk, "cli systole -q 0");
    return c.done(std::to_string(complexes.size()) + " connected complexes");
}

Outcome rescaling()
{
    Checker c;
    const Rational ts[] = {Rational(1, 2), 2, 3, 7};
    const std::vector<std::pair<std::string, WeightedCellComplex>> complexes = {
        {"circle(3)", lib::circle(3)}, {"flat-torus(3)", lib::flat_torus(3)}, {"cubical-sphere(2)", lib::cubical_sphere(2)}};
    int applied = 0;
    for (const auto& [name, k] : complexes)
        for (int q : {1, 2}) {
            if (q > k.top_dim() || homology(k).betti(q) == 0)
                continue;
            for (const auto& t : ts) {
                const auto r = verify_rescaling(k, q, t);
                c.require(r.applicable && r.holds, name + " q=" + std::to_string(q) + " t=" + to_string(t));
                ++applied;
            }
        }
    c.require(applied == 16, "expected 16 rescaling instances, ran " + std::to_string(applied));
    return c.done(std::to_string(applied) + " (complex, q, t) instances");
}

Outcome product_inequality()
{
    Checker c;
    const auto torus = verify_product_inequality(lib::circle(4), lib::circle(4, 2), 1, 1);
    c.require(torus.applicable && torus.holds, "stsys_2(S1 x S1) <= stsys_1 * stsys_1");
    const auto s1s2 = verify_product_inequality(lib::circle(3), lib::sphere(2), 1, 2);
    c.require(s1s2.applicable && s1s2.holds, "stsys_3(S1 x S2) <= stsys_1 * stsys_2");
    const auto cubical = verify_product_inequality(lib::cubical_circle(3, Rational(1, 2)), lib::cubical_sphere(2), 1, 2);
    c.require(cubical.applicable && cubical.holds, "cubical S1 x S2");
    return c.done("torus and S1 x S2 products");
}

Outcome projection()
{
    Checker c;
    const auto r = verify_projection_equality(lib::sphere(2), lib::circle(3), 2);
    c.require(r.applicable, "Kunneth hypothesis not verified");
    c.require(r.holds, "stsys_2(S2 x S1) != stsys_2(S2)");
    const auto scaled = verify_projection_equality(lib::sphere(2, Rational(3, 2)), lib::cubical_circle(2, 5), 2);
    c.require(scaled.applicable && scaled.holds, "weighted S2 x S1");
    return c.done("stsys_2(S2 x S1) = stsys_2(S2)");
}

Outcome oracle_equivalence()
{
    Checker c;
    int fixtures = 0;
    int comparisons = 0;
    for (const auto& [name, k] : testing::oracle_fixtures()) {
        c.require(k.total_cells() <= 30, name + " has more than 30 cells");
        const auto h = homology(k);
        for (int q = 0; q <= k.top_dim(); ++q) {
            if (h.betti(q) > 2)
                continue;
            const auto lp = stable_systole(k, h, q);
            const auto brute = testing::brute_force_systole(k, q);
            const bool same = lp.value.has_value() == brute.value.has_value() && (!lp.value || *lp.value == *brute.value);
            c.require(same, name + " q=" + std::to_string(q));
            ++comparisons;
        }
        ++fixtures;
    }
    c.require(fixtures >= 10, "fewer than 10 fixtures");
    return c.done(std::to_string(fixtures) + " fixtures, " + std::to_string(comparisons) + " degrees");
}

Outcome torsion()
{
    Checker c;
    const auto s = stable_systole(lib::rp2(), 1);
    c.require(s.status == SearchStatus::Trivial && !s.value, "rp2 degree 1 is not trivial");
    return c.done("rp2 degree 1 reports trivial");
}

Outcome sandwich()
{
    Checker c;
    const auto c3 = lib::circle(3, 2);
    for (int d : {2, 3}) {
        std::map<int, int> wrap;
        for (int v = 0; v < 3 * d; ++v)
            wrap[v] = v % 3;
        const SimplicialMap g(lib::circle(3 * d), c3, wrap);
        c.require(degree_bound(g) == d, "D(g) != " + std::to_string(d));
        const auto r = verify_degree_sandwich(g, 1);
        c.require(r.applicable && r.holds, "sandwich fails for the degree " + std::to_string(d) + " cover");
    }
    return c.done("double and triple covers of circle(3)");
}

Outcome cup_length_checks()
{
    Checker c;
    c.require(cup_length(lib::sphere(2)).cup_length == 1, "boundary of the 3-simplex");
    c.require(cup_length(lib::torus9()).cup_length == 2, "9-vertex torus");

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto random_class = [&](std::size_t n) {
        std::vector<Rational> v(n);
        for (auto& x : v)
            x = Rational(coef(rng), 1 + std::abs(coef(rng)));
        return v;
    };
    int commutative = 0;
    int associative = 0;
    for (const auto& k : {lib::torus9(), lib::simplicial_torus(3)}) {
        const auto h = homology(k);
        const auto basis = cohomology_basis(k, h);
        auto cup = [&](int p, const std::vector<Rational>& a, int q, const std::vector<Rational>& b) {
            return cohomology_coordinates(
                k, h, cup_product(k, cohomology_representative(k, basis, p, a), cohomology_representative(k, basis, q, b)));
        };
        for (int trial = 0; trial < 12; ++trial) {
            const int p = 1;
            const int q = k.top_dim() == 3 && trial % 2 ? 2 : 1;
            const auto a = random_class(basis.dimension(p));
            const auto b = random_class(basis.dimension(q));
            auto ba = cup(q, b, p, a);
            if ((p * q) % 2)
                for (auto& x : ba)
                    x = -x;
            c.require(cup(p, a, q, b) == ba, "graded commutativity");
            ++commutative;
        }
        if (k.top_dim() == 3)
            for (int trial = 0; trial < 24; ++trial) {
                const auto a = random_class(3);
                const auto b = random_class(3);
                const auto d = random_class(3);
                c.require(cup(2, cup(1, a, 1, b), 1, d) == cup(1, a, 2, cup(1, b, 1, d)), "associativity");
                ++associative;
            }
    }
    c.require(commutative >= 20 && associative >= 20, "too few samples");
    return c.done(std::to_string(commutative) + " commutativity pairs, " + std::to_string(associative) +
                  " associativity triples");
}

Outcome sphere_products()
{
    Checker c;
    const std::vector<std::pair<std::string, int>> cases = {
        {"S1 x S2", 2}, {"S1 x S3", 2}, {"S2 x S2 x S7", 3}, {"S1 x S1 x S1", 3}, {"S3 x S5", 2}, {"S1 x S4 x S2 x S6", 4}};
    for (const auto& [expr, n] : cases) {
        c.require(run_cli({"catstsys", expr, "--expect-exact", std::to_string(n)}) == cli::kOk, expr);
        const auto v = catstsys_bounds(parse_product_expression(expr));
        c.require(v.applied(Rule::SphereProduct), expr + ": sphere-product rule not applied");
    }
    return c.done(std::to_string(cases.size()) + " sphere products exact at the number of spheres");
}

Outcome product_arithmetic()
{
    Checker c;
    const auto s2s3 = catstsys_bounds(parse_product_expression("S2 x S3"));
    c.require(s2s3.exact && s2s3.lower == 2 && s2s3.applied(Rule::MaximalCupLength), "S2 x S3 exact 2");
    const auto grouped = catstsys_bounds(parse_product_expression("(S2 x S2) x S3"));
    c.require(grouped.exact && grouped.lower == 3 && grouped.applied(Rule::ModConditionProduct),
              "(S2 x S2) x S3 exact 3 via the MOD condition");
    const auto s1s2 = catstsys_bounds(parse_product_expression("S1 x S2"));
    c.require(!s1s2.applied(Rule::ModConditionProduct) && s1s2.note(Rule::ModConditionProduct) != nullptr,
              "S1 x S2 should report the MOD-condition product rule as inapplicable");
    c.require(s1s2.exact && s1s2.lower == 2 && s1s2.applied(Rule::SphereProduct), "S1 x S2 closed by the sphere rule");
    return c.done("S2 x S3 = 2, (S2 x S2) x S3 = 3, S1 x S2 = 2 by the sphere rule");
}

Outcome deformation()
{
    Checker c;
    const auto torus = deformation_sweep(DeformationFamily(product_complex(lib::circle(4), lib::circle(4))),
                                         Partition({1, 1}));
    c.require(torus.verdict == GrowthVerdict::Bounded, "T2 (1,1) not bounded");

    const auto x = lib::cubical_circle(3);
    const auto y = lib::cubical_sphere(2);
    const Partition p({1, 1, 1});
    const auto r = deformation_sweep(DeformationFamily(product_complex(x, y)), p);
    c.require(r.verdict == GrowthVerdict::Diverges && r.exponent.has_value(), "S1 x S2 (1,1,1) does not diverge");

    // w = sum over sphere dimensions r with s' > s of r (s' - s), where s' is
    // the multiplicity of r in the partition and s the number of S^r factors.
    const std::map<int, int> factor_count = {{1, 1}, {2, 1}};
    int w = 0;
    for (const auto& [dim, s] : factor_count) {
        const int s_prime = static_cast<int>(p.duplicated_number(dim));
        if (s_prime > s)
            w += dim * (s_prime - s);
    }
    c.require(r.exponent == w, "extracted exponent " + (r.exponent ? std::to_string(*r.exponent) : "none") +
                                   " != formula " + std::to_string(w));
    return c.done("T2 (1,1) bounded, S1 x S2 (1,1,1) diverges with w = " + std::to_string(w));
}

Outcome norm_axioms()
{
    Checker c;
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> coef(-3, 3);
    const std::vector<std::pair<WeightedCellComplex, int>> fixtures = {
        {lib::flat_torus(3, Rational(1, 3)), 1},
        {lib::torus9(), 1},
        {lib::graph(2, {{0, 1}, {0, 1}, {0, 1}}, {1, 2, 3}), 1},
        {lib::graph(1, {{0, 0}, {0, 0}}, {2, Rational(3, 2)}), 1},
        {product_complex(lib::circle(3), lib::circle(4, 2)), 1},
        {product_complex(lib::cubical_circle(2), lib::cubical_sphere(2)), 2},
    };
    int sampled = 0;
    for (const auto& [k, q] : fixtures) {
        const auto h = homology(k);
        const std::size_t b = h.betti(q);
        auto sample = [&] {
            std::vector<Rational> v(b);
            for (auto& x : v)
                x = Rational(coef(rng), 1 + std::abs(coef(rng)));
            return v;
        };
        auto norm = [&](const std::vector<Rational>& v) {
            return stable_norm(k, h, HomologyClass{q, v, std::nullopt}).value;
        };
        c.require(norm(std::vector<Rational>(b)) == 0, "norm of zero");
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = sample();
            const auto bb = sample();
            const Rational lambda(coef(rng), 1 + std::abs(coef(rng)));
            std::vector<Rational> scaled(b), sum(b);
            bool zero = true;
            for (std::size_t i = 0; i < b; ++i) {
                scaled[i] = lambda * a[i];
                sum[i] = a[i] + bb[i];
                zero = zero && a[i] == 0;
            }
            const Rational na = norm(a);
            c.require(norm(scaled) == abs(lambda) * na, "homogeneity");
            c.require(norm(sum) <= na + norm(bb), "triangle inequality");
            c.require(zero ? na == 0 : na > 0, "positivity");
            ++sampled;
        }
    }
    c.require(sampled >= 50, "fewer than 50 sampled classes");
    return c.done(std::to_string(sampled) + " sampled classes on " + std::to_string(fixtures.size()) + " fixtures");
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"stable 0-systole is 1", zero_systole},
        {"rescaling law", rescaling},
        {"product inequality", product_inequality},
        {"projection equality", projection},
        {"exhaustive cycle oracle", oracle_equivalence},
        {"torsion classes are trivial", torsion},
        {"degree sandwich", sandwich},
        {"cup length and ring axioms", cup_length_checks},
        {"sphere products", sphere_products},
        {"maximal cup length and MOD arithmetic", product_arithmetic},
        {"deformation sweeps", deformation},
        {"stable norm axioms", norm_axioms},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
                  << o.detail << " [" << ms << " ms]\n";
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
